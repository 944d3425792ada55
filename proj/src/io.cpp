#include "toric/io.hpp"
#include "toric/birational.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <charconv>
#include <map>
#include <sstream>

namespace toric {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::string_view field, const std::string &msg) {
    std::string where = line ? "line " + std::to_string(line) + ", " : "";
    throw Error(ErrorKind::ParseError, where + "field '" + std::string(field) + "': " + msg);
}

// Recursive-descent reader for one value.
class Reader {
public:
    Reader(std::string_view s, std::size_t line, std::string_view field) : s_(s), line_(line), field_(field) {}

    std::int64_t integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::int64_t v = 0;
        std::string_view tok = s_.substr(start, pos_ - start);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
            fail("expected an integer at '" + std::string(s_.substr(start)) + "'");
        return v;
    }

    Rational rational() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                    s_[pos_] == '/' || s_[pos_] == '+'))
            ++pos_;
        std::string tok(s_.substr(start, pos_ - start));
        try {
            return parse_rational(tok);
        } catch (const std::exception &) {
            fail("expected a rational a/b, got '" + tok + "'");
        }
    }

    LatticePoint point() {
        expect('(');
        std::vector<std::int64_t> c;
        if (!peek(')')) {
            c.push_back(integer());
            while (peek(',')) {
                expect(',');
                c.push_back(integer());
            }
        }
        expect(')');
        return LatticePoint(std::move(c));
    }

    template <class F> auto list(F item) {
        expect('[');
        std::vector<decltype(item())> out;
        if (!peek(']')) {
            out.push_back(item());
            while (peek(',')) {
                expect(',');
                out.push_back(item());
            }
        }
        expect(']');
        return out;
    }

    void finish() {
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing text '" + std::string(s_.substr(pos_)) + "'");
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string &msg) { parse_fail(line_, field_, msg); }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::string_view field_;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string point_list_str(const std::vector<LatticePoint> &pts) {
    std::string s = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pts[i].str();
    return s + "]";
}

std::string pretty(const nlohmann::json &j) { return j.dump(2) + "\n"; }

nlohmann::json rational_json(const Rational &q) { return to_string(q); }

nlohmann::json vector_json(const RationalVector &v) {
    auto a = nlohmann::json::array();
    for (const auto &x : v) a.push_back(to_string(x));
    return a;
}

nlohmann::json face_json(const ShiftedNewton &sn, std::size_t f) {
    return {{"active_facets", sn.faces[f].active_facets}, {"dim", sn.faces[f].dim}};
}

nlohmann::json records_json(const ShiftedNewton &sn, const std::vector<FixedIdealRecord> &recs) {
    auto a = nlohmann::json::array();
    for (const auto &r : recs) {
        auto faces = nlohmann::json::array();
        for (auto f : r.generating_faces) faces.push_back(face_json(sn, f));
        nlohmann::json j = ideal_json(r.ideal);
        j["label"] = r.label;
        j["faces"] = faces;
        a.push_back(j);
    }
    return a;
}

nlohmann::json header(std::string_view cmd, const Instance &inst) {
    return {{"format_version", kFormatVersion},
            {"command", std::string(cmd)},
            {"instance", instance_json(inst.config)},
            {"period", inst.triple.period()},
            {"N", inst.N},
            {"base", vector_json(inst.triple.cartier().base())}};
}

} // namespace

InstanceConfig parse_instance(std::string_view text) {
    InstanceConfig cfg;
    std::map<std::string, std::size_t> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) parse_fail(line_no, line, "expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (seen.count(key)) parse_fail(line_no, key, "duplicate key (first on line " + std::to_string(seen[key]) + ")");
        seen[key] = line_no;

        Reader r(value, line_no, key);
        if (key == "format_version") {
            auto v = r.integer();
            if (v != kFormatVersion) parse_fail(line_no, key, "unsupported version " + std::to_string(v));
            cfg.format_version = static_cast<int>(v);
        } else if (key == "dimension") {
            auto v = r.integer();
            if (v < 1 || v > 4) parse_fail(line_no, key, "dimension must be between 1 and 4");
            cfg.dimension = static_cast<std::size_t>(v);
        } else if (key == "rays") {
            cfg.rays = r.list([&] { return r.point(); });
        } else if (key == "w") {
            cfg.w = r.point();
        } else if (key == "divisor") {
            cfg.divisor = r.list([&] { return r.rational(); });
        } else if (key == "p") {
            cfg.p = r.integer();
        } else if (key == "e") {
            cfg.e = r.integer();
        } else if (key == "a_generators") {
            cfg.a_generators = r.list([&] { return r.point(); });
        } else if (key == "t") {
            cfg.t = r.rational();
        } else if (key == "N") {
            cfg.N = r.integer();
        } else if (key == "margin") {
            cfg.margin = r.integer();
            if (cfg.margin < 0) parse_fail(line_no, key, "margin must be nonnegative");
        } else if (key == "pool_cap") {
            auto v = r.integer();
            if (v < 1) parse_fail(line_no, key, "pool_cap must be positive");
            cfg.pool_cap = static_cast<std::size_t>(v);
        } else {
            parse_fail(line_no, key, "unknown key");
        }
        r.finish();
    }

    for (const char *req : {"dimension", "rays", "p"})
        if (!seen.count(req)) parse_fail(0, req, "missing required field");
    if (seen.count("w") == seen.count("divisor"))
        parse_fail(0, "w", "exactly one of 'w' and 'divisor' must be given");
    auto check_dim = [&](const LatticePoint &u, const char *field) {
        if (u.dim() != cfg.dimension)
            parse_fail(seen[field], field,
                       u.str() + " has dimension " + std::to_string(u.dim()) + ", expected " +
                           std::to_string(cfg.dimension));
    };
    for (const auto &u : cfg.rays) check_dim(u, "rays");
    for (const auto &u : cfg.a_generators) check_dim(u, "a_generators");
    if (cfg.w) check_dim(*cfg.w, "w");

    build_instance(cfg);
    return cfg;
}

std::string serialize_instance(const InstanceConfig &cfg) {
    std::ostringstream os;
    os << "format_version = " << cfg.format_version << '\n';
    os << "dimension = " << cfg.dimension << '\n';
    os << "rays = " << point_list_str(cfg.rays) << '\n';
    if (cfg.w) os << "w = " << cfg.w->str() << '\n';
    if (cfg.divisor) {
        os << "divisor = [";
        for (std::size_t i = 0; i < cfg.divisor->size(); ++i) os << (i ? ", " : "") << to_string((*cfg.divisor)[i]);
        os << "]\n";
    }
    os << "p = " << cfg.p << '\n';
    os << "e = " << cfg.e << '\n';
    if (!cfg.a_generators.empty()) os << "a_generators = " << point_list_str(cfg.a_generators) << '\n';
    os << "t = " << to_string(cfg.t) << '\n';
    if (cfg.N) os << "N = " << *cfg.N << '\n';
    os << "margin = " << cfg.margin << '\n';
    os << "pool_cap = " << cfg.pool_cap << '\n';
    return os.str();
}

Instance build_instance(const InstanceConfig &cfg) {
    auto amb = make_semigroup(cone_from_rays(cfg.rays));
    if (amb->dim() != cfg.dimension) throw Error(ErrorKind::DimensionMismatch, "rays do not match the dimension");
    if (!is_prime(cfg.p))
        throw Error(ErrorKind::InvalidCartierData, "p = " + std::to_string(cfg.p) + " is not prime");
    if (cfg.e < 1) throw Error(ErrorKind::InvalidCartierData, "e must be positive");
    // Reject a bad t before anything expensive.
    if (cfg.t < 0) throw Error(ErrorKind::NegativeScale, "t must be nonnegative");
    admissible_exponents(cfg.t, cfg.p, cfg.e);

    LatticePoint w = cfg.w ? *cfg.w : divisor_to_w(amb->cone(), DivisorData{*cfg.divisor}, cfg.p, cfg.e);
    auto c = CartierData::create(amb, cfg.p, cfg.e, w);
    auto a = cfg.a_generators.empty() ? MonomialIdeal::unit(amb) : MonomialIdeal::from_generators(amb, cfg.a_generators);
    auto tr = TripleData::create(c, a, cfg.t);
    std::int64_t n = cfg.N ? *cfg.N : 3 * tr.period();
    if (n < tr.period())
        throw Error(ErrorKind::InadmissibleExponent,
                    "N = " + std::to_string(n) + " is below the period " + std::to_string(tr.period()));
    return Instance{cfg, amb, std::move(tr), n};
}

MonomialIdeal parse_ideal(SemigroupPtr amb, std::string_view text) {
    text = trim(text);
    if (text == "0") return MonomialIdeal::zero(amb);
    if (text == "R" || text == "1") return MonomialIdeal::unit(amb);
    Reader r(text, 0, "ideal");
    auto pts = r.list([&] { return r.point(); });
    r.finish();
    for (const auto &u : pts)
        if (u.dim() != amb->dim()) parse_fail(0, "ideal", u.str() + " has the wrong dimension");
    return MonomialIdeal::from_generators(std::move(amb), pts);
}

std::string monomial_string(const LatticePoint &u) {
    static const char vars[] = {'x', 'y', 'z'};
    if (u.dim() > 3) return {};
    if (u.is_zero()) return "1";
    std::string s;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        if (u[i] == 0) continue;
        s += vars[i];
        if (u[i] < 0) s += "^{" + std::to_string(u[i]) + "}";
        else if (u[i] != 1) s += "^" + std::to_string(u[i]);
    }
    return s;
}

nlohmann::json point_json(const LatticePoint &u) { return u.coords(); }

nlohmann::json ideal_json(const MonomialIdeal &i) {
    auto gens = nlohmann::json::array();
    auto mons = nlohmann::json::array();
    for (const auto &g : i.generators()) {
        gens.push_back(point_json(g));
        if (g.dim() <= 3) mons.push_back(monomial_string(g));
    }
    nlohmann::json j{{"generators", gens}, {"text", i.str()}};
    if (i.ambient().dim() <= 3) j["monomials"] = mons;
    return j;
}

nlohmann::json instance_json(const InstanceConfig &cfg) {
    auto rays = nlohmann::json::array();
    for (const auto &r : cfg.rays) rays.push_back(point_json(r));
    auto agens = nlohmann::json::array();
    for (const auto &g : cfg.a_generators) agens.push_back(point_json(g));
    nlohmann::json j{{"dimension", cfg.dimension}, {"rays", rays},     {"p", cfg.p},
                     {"e", cfg.e},                 {"a_generators", agens}, {"t", rational_json(cfg.t)}};
    if (cfg.w) j["w"] = point_json(*cfg.w);
    if (cfg.divisor) {
        auto d = nlohmann::json::array();
        for (const auto &x : *cfg.divisor) d.push_back(rational_json(x));
        j["divisor"] = d;
    }
    return j;
}

CommandResult run_command(std::string_view cmd, const Instance &inst, const CommandOptions &opt) {
    const auto start = std::chrono::steady_clock::now();
    const auto &tr = inst.triple;
    const auto &c = tr.cartier();
    const std::int64_t n_max = opt.N ? *opt.N : inst.N;
    const std::int64_t margin = opt.margin ? *opt.margin : inst.margin();
    if (opt.format != "doc" && opt.format != "svg")
        throw Error(ErrorKind::ParseError, "format must be 'doc' or 'svg', got '" + opt.format + "'");
    if (opt.format == "svg" && cmd != "plot") throw Error(ErrorKind::Unsupported, "svg output is only for plot");

    CommandResult res;
    nlohmann::json doc = header(cmd, inst);
    if (opt.N) doc["N"] = n_max;

    if (cmd == "enumerate") {
        auto sn = shifted_newton(tr);
        auto recs = enumerate_fixed(sn);
        doc["fixed_ideals"] = records_json(sn, recs);
        doc["count"] = recs.size();
        doc["largest"] = ideal_json(largest_fixed(sn));
        if (!largest_fixed(sn).is_zero()) doc["smallest_nonzero"] = ideal_json(smallest_nonzero_fixed(sn));
        doc["maps_into_ring"] = c.maps_into_ring();
    } else if (cmd == "verify") {
        if (!opt.ideal) throw Error(ErrorKind::ParseError, "verify needs --ideal");
        auto i = parse_ideal(c.ambient(), *opt.ideal);
        auto v = verify_fixed(tr, i, n_max);
        doc["ideal"] = ideal_json(i);
        doc["verdict"] = std::string(to_string(v.verdict));
        doc["reason"] = v.reason;
        doc["checked_up_to"] = v.checked_up_to;
        if (v.witness) {
            doc["witness"] = point_json(*v.witness);
            if (v.witness->dim() <= 3) doc["witness_monomial"] = monomial_string(*v.witness);
        }
        auto dec = decompose_fixed(shifted_newton(tr), i);
        if (dec.faces) {
            auto sn = shifted_newton(tr);
            auto faces = nlohmann::json::array();
            for (auto f : *dec.faces) faces.push_back(face_json(sn, f));
            doc["faces"] = faces;
        }
        res.exit_code = v.verdict == Verdict::Fixed ? 0 : 1;
    } else if (cmd == "non-lc") {
        doc["ideal"] = ideal_json(non_lc_ideal(c.ambient(), BasePointData::from_cartier(c), tr.a_ideal(), tr.t()));
    } else if (cmd == "test-ideal") {
        doc["ideal"] = ideal_json(smallest_nonzero_fixed(shifted_newton(tr)));
    } else if (cmd == "stable-image") {
        auto s = stable_image_chain(c);
        doc["ideal"] = ideal_json(s.ideal);
        auto chain = nlohmann::json::array();
        for (const auto &i : s.chain) chain.push_back(i.str());
        doc["chain"] = chain;
        doc["maps_into_ring"] = c.maps_into_ring();
    } else if (cmd == "cross-validate") {
        auto rep = cross_validate(tr, n_max, margin, inst.config.pool_cap);
        auto checks = nlohmann::json::array();
        for (const auto &ch : rep.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        doc["checks"] = checks;
        doc["pass"] = rep.ok();
        res.exit_code = rep.ok() ? 0 : 1;
    } else if (cmd == "plot") {
        auto sn = shifted_newton(tr);
        auto svg = plot_svg(sn, enumerate_fixed(sn));
        if (opt.format == "svg") {
            res.output = std::move(svg);
            return res;
        }
        doc["svg"] = svg;
    } else {
        throw Error(ErrorKind::Unsupported, "unknown command '" + std::string(cmd) + "'");
    }

    if (opt.timing)
        doc["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    res.output = pretty(doc);
    return res;
}

} // namespace toric
