#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "pindot/pinned.hpp"
#include "pindot/plane.hpp"
#include "pindot/sumsets.hpp"

namespace pindot {

/// Point set text format:
///   line 1          "p,k"
///   following lines "a b"   (two canonical codes, space separated)
/// '#' starts a comment, blank lines are skipped, and a duplicate point is
/// an error naming its line number.
PointSet read_point_set(std::istream& in, const std::string& source = "<stream>");
PointSet read_point_set_file(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& E);
void write_point_set_file(const std::string& path, const PointSet& E);

/// Scalar set text format:
///   line 1 "p,k"
///   line 2 space-separated canonical codes, strictly increasing
/// A missing or blank second line is the empty set. Comments as above.
ScalarSet read_scalar_set(std::istream& in, const std::string& source = "<stream>");
ScalarSet read_scalar_set_file(const std::string& path);
void write_scalar_set(std::ostream& out, const ScalarSet& S);
void write_scalar_set_file(const std::string& path, const ScalarSet& S);

/// "inf" for the infinite direction, the decimal code otherwise.
std::string direction_to_string(Direction theta);
Direction direction_from_string(const std::string& text, const Field& f);

nlohmann::ordered_json point_to_json(Point pt);
nlohmann::ordered_json point_set_to_json(const PointSet& E);

/// {"x": [a,b], "y": [a,b], "theta": "inf"|"code", "moment": n,
///  "dot_count": n, "dot_values": [codes ascending]}
nlohmann::ordered_json witness_to_json(const PinnedWitness& w);

/// [{"theta": "inf"|"code", "moment": n}, ...] in canonical order.
nlohmann::ordered_json moment_profile_to_json(const MomentProfile& profile);

}  // namespace pindot
