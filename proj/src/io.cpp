#include "pindot/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pindot {

namespace {

void strip_comment(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void fail(const std::string& source, std::size_t lineno, const std::string& what) {
    throw std::runtime_error(source + ":" + std::to_string(lineno) + ": " + what);
}

/// First non-blank, non-comment line must be the "p,k" designation.
Field read_header(std::istream& in, const std::string& source, std::size_t& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ss(line);
        std::string token;
        ss >> token;
        std::string extra;
        if (ss >> extra) fail(source, lineno, "expected a lone field designation \"p,k\"");
        try {
            return Field::parse(token);
        } catch (const std::exception& e) {
            fail(source, lineno, e.what());
        }
    }
    throw std::runtime_error(source + ": missing field designation line");
}

Elem parse_code(const Field& f, const std::string& token, const std::string& source, std::size_t lineno) {
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        fail(source, lineno, "bad element code '" + token + "'");
    }
    if (used != token.size()) fail(source, lineno, "bad element code '" + token + "'");
    if (value >= f.q()) fail(source, lineno, "element code " + token + " out of range for GF(" + std::to_string(f.q()) + ")");
    return static_cast<Elem>(value);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

}  // namespace

PointSet read_point_set(std::istream& in, const std::string& source) {
    std::size_t lineno = 0;
    Field f = read_header(in, source, lineno);
    std::vector<Point> points;
    std::vector<char> seen(static_cast<std::size_t>(f.q()) * f.q(), 0);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!(ss >> a >> b) || (ss >> extra))
            fail(source, lineno, "expected exactly two element codes \"a b\"");
        Point pt{parse_code(f, a, source, lineno), parse_code(f, b, source, lineno)};
        std::size_t cell = static_cast<std::size_t>(pt.x) * f.q() + pt.y;
        if (seen[cell])
            fail(source, lineno, "duplicate point " + a + " " + b);
        seen[cell] = 1;
        points.push_back(pt);
    }
    return PointSet(f, std::move(points));
}

PointSet read_point_set_file(const std::string& path) {
    auto in = open_input(path);
    return read_point_set(in, path);
}

void write_point_set(std::ostream& out, const PointSet& E) {
    out << E.field().label() << "\n";
    for (Point pt : E.members()) out << pt.x << " " << pt.y << "\n";
}

void write_point_set_file(const std::string& path, const PointSet& E) {
    auto out = open_output(path);
    write_point_set(out, E);
}

ScalarSet read_scalar_set(std::istream& in, const std::string& source) {
    std::size_t lineno = 0;
    Field f = read_header(in, source, lineno);
    std::vector<Elem> members;
    std::string line;
    bool have_members = false;
    while (std::getline(in, line)) {
        ++lineno;
        strip_comment(line);
        if (blank(line)) continue;
        if (have_members) fail(source, lineno, "scalar set holds a single member line");
        have_members = true;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            Elem code = parse_code(f, token, source, lineno);
            if (!members.empty() && code <= members.back())
                fail(source, lineno, "codes must be strictly increasing at '" + token + "'");
            members.push_back(code);
        }
    }
    return ScalarSet(f, std::move(members));
}

ScalarSet read_scalar_set_file(const std::string& path) {
    auto in = open_input(path);
    return read_scalar_set(in, path);
}

void write_scalar_set(std::ostream& out, const ScalarSet& S) {
    out << S.field().label() << "\n";
    const char* sep = "";
    for (Elem a : S.members()) {
        out << sep << a;
        sep = " ";
    }
    out << "\n";
}

void write_scalar_set_file(const std::string& path, const ScalarSet& S) {
    auto out = open_output(path);
    write_scalar_set(out, S);
}

std::string direction_to_string(Direction theta) {
    return theta.is_infinite() ? "inf" : std::to_string(theta.theta());
}

Direction direction_from_string(const std::string& text, const Field& f) {
    if (text == "inf") return Direction::infinity();
    std::uint64_t value = 0;
    std::size_t used = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw std::runtime_error("bad direction '" + text + "'");
    }
    if (used != text.size()) throw std::runtime_error("bad direction '" + text + "'");
    if (value >= f.q()) throw std::runtime_error("direction code " + text + " out of range");
    return Direction::finite(static_cast<Elem>(value));
}

nlohmann::ordered_json point_to_json(Point pt) {
    return nlohmann::ordered_json::array({pt.x, pt.y});
}

nlohmann::ordered_json point_set_to_json(const PointSet& E) {
    auto arr = nlohmann::ordered_json::array();
    for (Point pt : E.members()) arr.push_back(point_to_json(pt));
    return arr;
}

nlohmann::ordered_json witness_to_json(const PinnedWitness& w) {
    nlohmann::ordered_json j;
    j["x"] = point_to_json(w.x);
    j["y"] = point_to_json(w.y);
    j["theta"] = direction_to_string(w.direction);
    j["moment"] = w.moment;
    j["dot_count"] = w.dot_values.size();
    j["dot_values"] = w.dot_values;
    return j;
}

nlohmann::ordered_json moment_profile_to_json(const MomentProfile& profile) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [theta, moment] : profile.per_direction) {
        nlohmann::ordered_json row;
        row["theta"] = direction_to_string(theta);
        row["moment"] = moment;
        arr.push_back(std::move(row));
    }
    return arr;
}

}  // namespace pindot
