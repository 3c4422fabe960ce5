#pragma once

// Line-oriented `key = value` experiment configuration with a [body] section
// and an optional [run] section (bare keys count as run keys).  parse_config
// collects *all* problems with line numbers before failing, so a bad file is
// diagnosed in one pass.

#include "latdisc/bigmath.hpp"
#include "latdisc/rotation_body.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latdisc {

struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> errs)
        : std::runtime_error(join(errs)), errors(std::move(errs)) {}
    std::vector<std::string> errors;

  private:
    static std::string join(const std::vector<std::string>& errs) {
        std::string s = "config errors:";
        for (const auto& e : errs) s += "\n  " + e;
        return s;
    }
};

struct ExperimentConfig {
    // body
    Family family = Family::Sphere;
    Rational radius{1};      // sphere, superball
    Rational axis{1};        // spheroid semi-axis along the rotation axis
    Rational cross{1};       // spheroid transverse semi-axis
    int p = 4;               // superball exponent

    // truncation orders
    int J = 0;               // d-series order; 0 = auto (N+3)
    std::int64_t K = 100'000;  // F-series cutoff
    int M = 0;               // boundary series extra order; 0 = auto (J-1)

    // grids
    int density = 8;
    std::vector<Rational> T_list{32, 64, 128, 256};
    std::vector<Rational> t_list{2};
    std::vector<Rational> X_list{100};
    std::vector<Rational> Y_list{100, 1000};

    // oracle bounds
    Rational oracle_bound{50};
    Rational polar_bound{500};

    // execution
    std::string out_path;
    unsigned workers = 1;
    std::uint64_t seed = 0;  // reserved; pipeline is deterministic

    bool operator==(const ExperimentConfig&) const = default;

    RotationBody body() const {
        switch (family) {
            case Family::Sphere: return RotationBody::sphere(radius);
            case Family::Spheroid: return RotationBody::spheroid(axis, cross);
            case Family::Superball: return RotationBody::superball(p, radius);
        }
        throw std::logic_error("unreachable");
    }

    int effective_J() const {
        if (J > 0) return J;
        const int N = family == Family::Superball ? p - 2 : 0;
        return N + 3;
    }
    int effective_M() const { return M > 0 ? M : effective_J() - 1; }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline bool parse_rational(const std::string& text, Rational& out) {
    const std::string t = trim(text);
    if (t.empty()) return false;
    const auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            out = Rational(BigInt(t));
        } else {
            const BigInt num(trim(t.substr(0, slash)));
            const BigInt den(trim(t.substr(slash + 1)));
            if (den == 0) return false;
            out = Rational(num, den);
        }
        return true;
    } catch (...) {
        return false;
    }
}

inline bool parse_rational_list(const std::string& text, std::vector<Rational>& out) {
    out.clear();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational q;
        if (!parse_rational(item, q)) return false;
        out.push_back(q);
    }
    return !out.empty();
}

}  // namespace detail

inline ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::vector<std::string> errors;
    bool have_family = false;
    bool have_axis = false, have_cross = false, have_p = false;

    auto err = [&](int line, const std::string& msg) {
        errors.push_back("line " + std::to_string(line) + ": " + msg);
    };

    std::string section = "run";
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') { err(lineno, "unterminated section header"); continue; }
            section = detail::trim(line.substr(1, line.size() - 2));
            if (section != "body" && section != "run")
                err(lineno, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) { err(lineno, "expected `key = value`"); continue; }
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string val = detail::trim(line.substr(eq + 1));
        if (key.empty()) { err(lineno, "empty key"); continue; }

        auto rat = [&](Rational& target, bool positive = true) {
            Rational q;
            if (!detail::parse_rational(val, q)) { err(lineno, "malformed rational `" + val + "` for key " + key); return; }
            if (positive && !(q > 0)) { err(lineno, key + " must be positive"); return; }
            target = q;
        };
        auto integer = [&](auto& target, long long lo) {
            try {
                const long long v = std::stoll(val);
                if (v < lo) { err(lineno, key + " must be >= " + std::to_string(lo)); return; }
                target = static_cast<std::remove_reference_t<decltype(target)>>(v);
            } catch (...) { err(lineno, "malformed integer `" + val + "` for key " + key); }
        };
        auto rlist = [&](std::vector<Rational>& target) {
            std::vector<Rational> lst;
            if (!detail::parse_rational_list(val, lst)) { err(lineno, "malformed list `" + val + "` for key " + key); return; }
            for (const auto& q : lst)
                if (!(q > 0)) { err(lineno, "entries of " + key + " must be positive"); return; }
            target = std::move(lst);
        };

        if (section == "body") {
            if (key == "family") {
                have_family = true;
                if (val == "sphere") cfg.family = Family::Sphere;
                else if (val == "spheroid") cfg.family = Family::Spheroid;
                else if (val == "superball") cfg.family = Family::Superball;
                else { err(lineno, "unsupported family `" + val + "` (sphere, spheroid, superball)"); have_family = false; }
            } else if (key == "radius") rat(cfg.radius);
            else if (key == "a") { rat(cfg.axis); have_axis = true; }
            else if (key == "b") { rat(cfg.cross); have_cross = true; }
            else if (key == "p") {
                int p = 0;
                try { p = std::stoi(val); } catch (...) { err(lineno, "malformed integer `" + val + "`"); continue; }
                if (p < 2 || p % 2 != 0) { err(lineno, "superball exponent p must be an even integer >= 2"); continue; }
                cfg.p = p;
                have_p = true;
            } else err(lineno, "unknown [body] key `" + key + "`");
        } else {
            if (key == "J") integer(cfg.J, 1);
            else if (key == "K") integer(cfg.K, 1);
            else if (key == "M") integer(cfg.M, 1);
            else if (key == "density") integer(cfg.density, 1);
            else if (key == "T") rlist(cfg.T_list);
            else if (key == "t") rlist(cfg.t_list);
            else if (key == "X") rlist(cfg.X_list);
            else if (key == "Y") rlist(cfg.Y_list);
            else if (key == "oracle_bound") rat(cfg.oracle_bound);
            else if (key == "polar_bound") rat(cfg.polar_bound);
            else if (key == "workers") integer(cfg.workers, 1);
            else if (key == "seed") integer(cfg.seed, 0);
            else if (key == "out") cfg.out_path = val;
            else err(lineno, "unknown key `" + key + "`");
        }
    }

    if (!have_family)
        errors.push_back("missing required key `family` in [body] "
                         "(required: family; sphere: radius; spheroid: a, b; superball: p, radius)");
    if (have_family && cfg.family == Family::Spheroid && (!have_axis || !have_cross))
        errors.push_back("spheroid requires keys `a` and `b` in [body]");
    if (have_family && cfg.family == Family::Superball && !have_p)
        errors.push_back("superball requires key `p` in [body]");
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return cfg;
}

// `include_execution = false` drops the knobs that cannot affect the data
// (workers, seed, output path); that variant feeds the reproducibility hash
inline std::string render_config(const ExperimentConfig& cfg, bool include_execution = true) {
    std::ostringstream os;
    os << "[body]\n";
    switch (cfg.family) {
        case Family::Sphere:
            os << "family = sphere\nradius = " << rational_str(cfg.radius) << "\n";
            break;
        case Family::Spheroid:
            os << "family = spheroid\na = " << rational_str(cfg.axis)
               << "\nb = " << rational_str(cfg.cross) << "\n";
            break;
        case Family::Superball:
            os << "family = superball\np = " << cfg.p
               << "\nradius = " << rational_str(cfg.radius) << "\n";
            break;
    }
    os << "\n[run]\n";
    auto list = [&](const char* key, const std::vector<Rational>& v) {
        os << key << " = ";
        for (std::size_t i = 0; i < v.size(); ++i)
            os << (i ? "," : "") << rational_str(v[i]);
        os << "\n";
    };
    if (cfg.J > 0) os << "J = " << cfg.J << "\n";
    os << "K = " << cfg.K << "\n";
    if (cfg.M > 0) os << "M = " << cfg.M << "\n";
    os << "density = " << cfg.density << "\n";
    list("T", cfg.T_list);
    list("t", cfg.t_list);
    list("X", cfg.X_list);
    list("Y", cfg.Y_list);
    os << "oracle_bound = " << rational_str(cfg.oracle_bound) << "\n";
    os << "polar_bound = " << rational_str(cfg.polar_bound) << "\n";
    if (include_execution) {
        os << "workers = " << cfg.workers << "\n";
        os << "seed = " << cfg.seed << "\n";
        if (!cfg.out_path.empty()) os << "out = " << cfg.out_path << "\n";
    }
    return os.str();
}

// FNV-1a over the canonical rendering of the science parameters; embedded in
// CSV comments so outputs can be audited against the configuration that
// produced them
inline std::uint64_t config_hash(const ExperimentConfig& cfg) {
    const std::string s = render_config(cfg, false);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace latdisc
