#include "ordcalc/json_io.hpp"

#include "ordcalc/errors.hpp"

#include <algorithm>

namespace ordcalc::io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t require_count(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_unsigned())
        throw schema_error(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

} // namespace

json ring_to_json(const RingSpec& r) {
    switch (r.kind()) {
    case RingKind::Integers:
        return json("Z");
    case RingKind::Rationals:
        return json("Q");
    case RingKind::LocalizedIntegers:
        return json{{"Zloc", r.inverted_primes()}};
    }
    throw schema_error("unknown ring kind");
}

RingSpec ring_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Z") return RingSpec::integers();
        if (s == "Q") return RingSpec::rationals();
        throw schema_error("ring must be \"Z\", \"Q\" or {\"Zloc\": [primes]}");
    }
    if (j.is_object() && j.contains("Zloc")) {
        const json& ps = j.at("Zloc");
        if (!ps.is_array() || ps.empty())
            throw schema_error("Zloc needs a nonempty array of primes");
        std::vector<unsigned long> primes;
        for (const json& p : ps) {
            if (!p.is_number_unsigned()) throw schema_error("Zloc primes must be integers");
            primes.push_back(p.get<unsigned long>());
        }
        try {
            return RingSpec::localized(std::move(primes));
        } catch (const precondition_error& e) {
            throw schema_error(e.what());
        }
    }
    throw schema_error("ring must be \"Z\", \"Q\" or {\"Zloc\": [primes]}");
}

json mat_to_json(const Mat& m) {
    json entries = json::array();
    for (const Rat& e : m.entries())
        entries.push_back(json::array({e.get_num().get_str(), e.get_den().get_str()}));
    return json{{"ring", ring_to_json(m.ring())},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(entries)}};
}

Mat mat_from_json(const json& j) {
    RingSpec ring = ring_from_json(require(j, "ring"));
    std::size_t rows = require_count(j, "rows");
    std::size_t cols = require_count(j, "cols");
    const json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows * cols)
        throw schema_error("entries must be an array of length rows*cols");
    std::vector<Rat> es;
    es.reserve(entries.size());
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw schema_error("each entry must be a [\"num\",\"den\"] pair of strings");
        try {
            es.push_back(rat_from_strings(e[0].get<std::string>(), e[1].get<std::string>()));
        } catch (const precondition_error& err) {
            throw schema_error(err.what());
        }
    }
    try {
        return Mat(rows, cols, std::move(ring), std::move(es));
    } catch (const precondition_error& err) {
        throw schema_error(err.what());
    }
}

json genset_to_json(const GenSet& s) {
    json j = mat_to_json(s.gens());
    j["nonneg"] = s.nonneg();
    return j;
}

GenSet genset_from_json(const json& j) {
    Mat m = mat_from_json(j);
    const json& nn = require(j, "nonneg");
    if (!nn.is_boolean()) throw schema_error("nonneg must be a boolean");
    try {
        return GenSet::with_flag(std::move(m), nn.get<bool>());
    } catch (const precondition_error& err) {
        throw schema_error(err.what());
    }
}

json cone_to_json(const cones::ConeRep& c) {
    json j{{"dim", c.dim}};
    if (c.hrep) j["hrep"] = mat_to_json(*c.hrep);
    if (c.vrep) j["vrep"] = mat_to_json(*c.vrep);
    if (c.lineality) j["lineality"] = mat_to_json(*c.lineality);
    return j;
}

cones::ConeRep cone_from_json(const json& j) {
    std::size_t dim = require_count(j, "dim");
    cones::ConeRep c;
    c.dim = dim;
    if (j.contains("hrep")) {
        Mat h = mat_from_json(j.at("hrep"));
        if (h.cols() != dim) throw schema_error("hrep column count differs from dim");
        c.hrep = std::move(h);
    }
    if (j.contains("vrep")) {
        Mat v = mat_from_json(j.at("vrep"));
        if (v.rows() != dim) throw schema_error("vrep row count differs from dim");
        c.vrep = std::move(v);
    }
    if (j.contains("lineality")) {
        Mat l = mat_from_json(j.at("lineality"));
        if (l.rows() != dim) throw schema_error("lineality row count differs from dim");
        c.lineality = std::move(l);
    }
    if (!c.hrep && !c.vrep)
        throw schema_error("cone needs at least one of hrep, vrep");
    try {
        cones::validate(c);
    } catch (const precondition_error& err) {
        throw schema_error(err.what());
    }
    return c;
}

json polycone_to_json(const cones::PolyCone& k) {
    json pieces = json::array();
    for (const cones::ConeRep& c : k.pieces) pieces.push_back(cone_to_json(c));
    return json{{"dim", k.dim}, {"pieces", std::move(pieces)}};
}

cones::PolyCone polycone_from_json(const json& j) {
    cones::PolyCone k;
    k.dim = require_count(j, "dim");
    const json& pieces = require(j, "pieces");
    if (!pieces.is_array()) throw schema_error("pieces must be an array of cones");
    for (const json& pc : pieces) {
        cones::ConeRep c = cone_from_json(pc);
        if (c.dim != k.dim) throw schema_error("piece dimension differs from the union");
        k.pieces.push_back(std::move(c));
    }
    return k;
}

json hbasis_to_json(const hilbert::HilbertBasis& hb) {
    json j{{"basis", genset_to_json(hb.basis)}};
    if (hb.box_certified)
        j["box_certified"] = *hb.box_certified;
    else
        j["box_certified"] = nullptr;
    return j;
}

MixedSystemInput mixed_from_json(const json& j) {
    MixedSystemInput in{hilbert::MixedSystem{mat_from_json(require(j, "M")), {}}, std::nullopt};
    if (j.contains("sign_cols")) {
        const json& sc = j.at("sign_cols");
        if (!sc.is_array()) throw schema_error("sign_cols must be an array of column indices");
        for (const json& v : sc) {
            if (!v.is_number_unsigned())
                throw schema_error("sign_cols entries must be nonnegative integers");
            std::size_t idx = v.get<std::size_t>();
            if (idx >= in.sys.m.cols()) throw schema_error("sign_cols index out of range");
            in.sys.sign_cols.push_back(idx);
        }
        std::sort(in.sys.sign_cols.begin(), in.sys.sign_cols.end());
        in.sys.sign_cols.erase(
            std::unique(in.sys.sign_cols.begin(), in.sys.sign_cols.end()),
            in.sys.sign_cols.end());
    }
    if (j.contains("box") && !j.at("box").is_null()) {
        if (!j.at("box").is_number_integer()) throw schema_error("box must be an integer");
        in.box = j.at("box").get<long>();
    }
    return in;
}

json term_to_json(const lgroup::LatticeTerm& t) {
    using Kind = lgroup::LatticeTerm::Kind;
    if (t.kind() == Kind::Lin) {
        json coeffs = json::array();
        for (const Int& c : t.leaf().coeffs) coeffs.push_back(c.get_str());
        return json{{"lin", std::move(coeffs)}};
    }
    const char* op = nullptr;
    switch (t.kind()) {
    case Kind::Add: op = "add"; break;
    case Kind::Neg: op = "neg"; break;
    case Kind::Meet: op = "meet"; break;
    case Kind::Join: op = "join"; break;
    default: throw schema_error("unknown term node");
    }
    json args = json::array();
    for (std::size_t i = 0; i < t.arity(); ++i) args.push_back(term_to_json(t.arg(i)));
    return json{{"op", op}, {"args", std::move(args)}};
}

lgroup::LatticeTerm term_from_json(const json& j, std::size_t dim) {
    using lgroup::LatticeTerm;
    if (j.is_object() && j.contains("lin")) {
        const json& cs = j.at("lin");
        if (!cs.is_array() || cs.size() != dim)
            throw schema_error("lin leaf must list one coefficient per generator");
        std::vector<Int> coeffs;
        for (const json& c : cs) {
            if (c.is_number_integer())
                coeffs.emplace_back(c.get<long>());
            else if (c.is_string()) {
                Int v;
                if (mpz_set_str(v.get_mpz_t(), c.get<std::string>().c_str(), 10) != 0)
                    throw schema_error("bad integer literal in lin leaf");
                coeffs.push_back(std::move(v));
            } else
                throw schema_error("lin coefficients must be integers or decimal strings");
        }
        return LatticeTerm::lin(std::move(coeffs));
    }
    if (!j.is_object() || !j.contains("op") || !j.contains("args"))
        throw schema_error("term must be {\"lin\": [...]} or {\"op\": ..., \"args\": [...]}");
    std::string op = j.at("op").get<std::string>();
    const json& args = j.at("args");
    if (!args.is_array() || args.empty()) throw schema_error("term args must be a nonempty array");

    std::vector<LatticeTerm> parts;
    for (const json& a : args) parts.push_back(term_from_json(a, dim));

    if (op == "neg") {
        if (parts.size() != 1) throw schema_error("neg takes exactly one argument");
        return LatticeTerm::neg(std::move(parts[0]));
    }
    auto fold = [&parts](LatticeTerm (*f)(LatticeTerm, LatticeTerm)) {
        LatticeTerm acc = std::move(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = f(std::move(acc), std::move(parts[i]));
        return acc;
    };
    if (op == "add") {
        if (parts.size() < 2) throw schema_error("add takes at least two arguments");
        return fold(&LatticeTerm::add);
    }
    if (op == "meet") {
        if (parts.size() < 2) throw schema_error("meet takes at least two arguments");
        return fold(&LatticeTerm::meet);
    }
    if (op == "join") {
        if (parts.size() < 2) throw schema_error("join takes at least two arguments");
        return fold(&LatticeTerm::join);
    }
    throw schema_error("unknown term op \"" + op + "\"");
}

lgroup::LPresentation presentation_from_json(const json& j, std::size_t piece_cap,
                                             std::size_t node_cap) {
    std::size_t n = require_count(j, "n");
    if (n == 0) throw schema_error("presentation needs at least one generator");
    std::vector<lgroup::LatticeTerm> relators;
    if (j.contains("relators")) {
        const json& rs = j.at("relators");
        if (!rs.is_array()) throw schema_error("relators must be an array of terms");
        for (const json& r : rs) relators.push_back(term_from_json(r, n));
    }
    lgroup::LPresentation pres =
        lgroup::make_presentation(n, std::move(relators), piece_cap, node_cap);
    if (j.contains("k_cone")) {
        // consistency check: provided cone generators against the recomputed
        // region, and recomputed generators against the provided union
        cones::PolyCone given = polycone_from_json(j.at("k_cone"));
        if (given.dim != n) throw schema_error("k_cone dimension differs from n");
        auto gens_inside = [](const cones::PolyCone& inner, const cones::PolyCone& outer) {
            for (const cones::ConeRep& piece : inner.pieces) {
                Mat g = cones::generators(piece);
                for (std::size_t c = 0; c < g.cols(); ++c)
                    if (!cones::contains_point(outer, g.col(c))) return false;
            }
            return true;
        };
        if (!gens_inside(given, pres.k_cone) || !gens_inside(pres.k_cone, given))
            throw schema_error("provided k_cone disagrees with the recomputed zero set");
    }
    return pres;
}

} // namespace ordcalc::io
