#include "commands.hpp"

#include "parahoric/classical.hpp"
#include "parahoric/error.hpp"
#include "parahoric/family.hpp"
#include "parahoric/induction.hpp"
#include "parahoric/ocsymbol.hpp"
#include "parahoric/slopes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

namespace parahoric::cli {

using nlohmann::ordered_json;

namespace {

// Bad input detected before or while validating parameters.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("invalid integer '" + s + "' in " + what);
    }
}

IntVec parse_ints(const std::string& s, const std::string& what) {
    IntVec out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

DatumPtr resolve_group(const std::string& name) {
    static const std::regex gl(R"(GL\(?(\d+)\)?)", std::regex::icase);
    std::smatch m;
    if (std::regex_match(name, m, gl)) {
        const int n = static_cast<int>(parse_int(m[1], "group"));
        if (n < 2 || n > 8) throw UsageError("GL(n) needs 2 <= n <= 8");
        return RootDatum::gl(n);
    }
    if (name == "GSp4" || name == "GSp(4)" || name == "gsp4") return RootDatum::gsp4();
    std::ifstream in(name);
    if (!in) throw UsageError("unknown group '" + name + "' (not in the catalog and not a readable file)");
    try {
        const auto j = nlohmann::json::parse(in);
        return std::make_shared<RootDatum>(j.value("name", std::string("custom")), j.at("rank").get<int>(),
                                           j.at("simple_roots").get<std::vector<IntVec>>(),
                                           j.at("coroots").get<std::vector<IntVec>>());
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed root datum file: " + std::string(e.what()));
    }
}

std::vector<std::size_t> parse_roots(const DatumPtr& d, const std::string& s) {
    std::vector<std::size_t> out;
    for (auto v : parse_ints(s, "simple root list")) {
        if (v < 1 || v > static_cast<std::int64_t>(d->num_simple()))
            throw UsageError("simple root index " + std::to_string(v) + " out of range 1.." +
                             std::to_string(d->num_simple()));
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

ParabolicType parse_parabolic(const DatumPtr& d, const std::string& s) {
    if (s.empty() || s == "borel" || s == "B") return ParabolicType::borel(d);
    if (s == "full" || s == "G") return ParabolicType::full(d);
    const bool gsp = d->name() == "GSp(4)";
    if (s == "siegel") {
        if (!gsp) throw UsageError("siegel parabolic is defined for GSp4 only");
        return ParabolicType(d, {0});
    }
    if (s == "klingen") {
        if (!gsp) throw UsageError("klingen parabolic is defined for GSp4 only");
        return ParabolicType(d, {1});
    }
    return ParabolicType(d, parse_roots(d, s));
}

Weight parse_weight(const DatumPtr& d, const std::string& s) {
    if (s.find('=') != std::string::npos) {
        if (d->name() != "GSp(4)") throw UsageError("named weights k1=..,k2=.. are for GSp4");
        std::int64_t k1 = 0, k2 = 0, c = 0;
        bool has1 = false, has2 = false;
        for (const auto& part : split(s, ',')) {
            const auto eq = part.find('=');
            const std::string key = part.substr(0, eq);
            const std::int64_t v = parse_int(part.substr(eq + 1), "weight");
            if (key == "k1") k1 = v, has1 = true;
            else if (key == "k2") k2 = v, has2 = true;
            else if (key == "c") c = v;
            else throw UsageError("unknown weight key '" + key + "'");
        }
        if (!has1 || !has2) throw UsageError("weight needs both k1 and k2");
        return Weight{{k1, k2, c}};
    }
    Weight w{parse_ints(s, "weight")};
    if (w.coords.size() != static_cast<std::size_t>(d->rank()))
        throw UsageError("weight has " + std::to_string(w.coords.size()) + " coordinates, group rank is " +
                         std::to_string(d->rank()));
    return w;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c + 1 < r.size())
                out << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
            else
                out << r[c] << "\n";
        }
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) out << csv_field(r[c]) << (c + 1 < r.size() ? "," : "\n");
    };
    line(header);
    for (const auto& r : rows) line(r);
}

// Rows are the derived view; json is canonical.
void emit(const RunConfig& cfg, std::ostream& out, const ordered_json& j, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& footer = {}) {
    if (cfg.format == "json") {
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        print_csv(out, header, rows);
    } else {
        print_table(out, header, rows);
        for (const auto& f : footer) out << f << "\n";
    }
}

std::string join(const IntVec& v, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

ordered_json padic_json(const PadicScalar& x) {
    ordered_json j;
    const auto v = x.valuation();
    if (!v) {
        j["value"] = "0";
        j["valuation"] = nullptr;
    } else if (*v >= 0) {
        j["value"] = to_string(x.residue());
        j["valuation"] = *v;
    } else {
        j["value"] = x.to_string();
        j["valuation"] = *v;
    }
    j["digits"] = x.absprec();
    return j;
}

std::size_t moments_of(const RunConfig& cfg) {
    const std::size_t m = cfg.M ? *cfg.M : default_precision();
    if (m < 2 || m > 200) throw UsageError("moment count must lie in 2..200");
    return m;
}

void check_level(const RunConfig& cfg) {
    if (cfg.N < 1) throw UsageError("--N must be positive");
    if (!is_prime(cfg.p)) throw UsageError("--p must be prime");
    if (cfg.N % cfg.p == 0) throw UsageError("--p must not divide --N");
}

// ---------------------------------------------------------------- slopes

int cmd_slopes(const RunConfig& cfg, std::ostream& out) {
    const DatumPtr d = resolve_group(cfg.group);
    const ParabolicType q = parse_parabolic(d, cfg.q);
    const Weight lambda = parse_weight(d, cfg.weight);
    d->check_weight(lambda);
    if (!d->is_dominant(lambda)) throw UsageError("weight " + join(lambda.coords) + " is not dominant");
    if (cfg.vals.empty()) throw UsageError("--vals is required");
    if (!is_prime(cfg.p)) throw UsageError("--p must be prime");
    std::vector<std::size_t> order = cfg.chain.empty() ? q.missing() : parse_roots(d, cfg.chain);
    if (q.is_full()) throw UsageError("Q = G has an empty chain; nothing to bound");
    ParabolicChain chain;
    try {
        chain = make_chain(q, order);
    } catch (const Error& e) {
        throw UsageError(std::string("invalid chain: ") + e.what());
    }
    ControllingDatum cd;
    if (!cfg.torus.empty()) {
        cd.chain = chain;
        for (const auto& part : split(cfg.torus, ';'))
            cd.elements.emplace_back(d, Cocharacter{parse_ints(part, "--t")}, cfg.p);
        if (cd.elements.size() != chain.added_roots.size())
            throw UsageError("--t needs one cocharacter per chain step");
        if (!verify_factorization(cd)) throw UsageError("--t does not give controlling operators for this chain");
    } else {
        cd = greedy_factorization(chain, cfg.p);
    }
    std::vector<Rational> vals;
    for (const auto& v : split(cfg.vals, ',')) {
        try {
            vals.push_back(parse_rational(v));
        } catch (const std::exception&) {
            throw UsageError("invalid valuation '" + v + "'");
        }
    }
    if (vals.size() != chain.added_roots.size())
        throw UsageError("--vals needs " + std::to_string(chain.added_roots.size()) + " entries, got " +
                         std::to_string(vals.size()));
    const SlopeReport rep = q_noncritical_verdict(cd, lambda, vals);

    ordered_json j;
    j["command"] = "slopes";
    j["group"] = d->name();
    std::vector<std::size_t> qs;
    for (auto a : q.subset()) qs.push_back(a + 1);
    j["Q"] = qs;
    j["weight"] = lambda.coords;
    j["p"] = cfg.p;
    j["precision"] = "exact";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < rep.steps.size(); ++i) {
        const auto& s = rep.steps[i];
        j["steps"].push_back({{"step", i + 1},
                              {"alpha", s.alpha + 1},
                              {"t", s.mu.coords},
                              {"h_crit", to_string(s.h_crit)},
                              {"h", to_string(s.h)},
                              {"pass", s.pass}});
        rows.push_back({std::to_string(i + 1), std::to_string(s.alpha + 1), "(" + join(s.mu.coords) + ")",
                        to_string(s.h_crit), to_string(s.h), s.pass ? "pass" : "fail"});
    }
    j["verdict"] = rep.verdict ? "pass" : "fail";
    emit(cfg, out, j, {"step", "alpha", "t", "h_crit", "h", "result"}, rows,
         {std::string("verdict: ") + (rep.verdict ? "pass" : "fail")});
    return rep.verdict ? kOk : kCheckedFailure;
}

// ---------------------------------------------------------------- bgg-check

int cmd_bgg(const RunConfig& cfg, std::ostream& out) {
    const DatumPtr d = resolve_group(cfg.group);
    if (d->name().rfind("GL(", 0) != 0) throw UsageError("bgg-check supports GL(n) groups");
    const int n = d->rank();
    Weight lambda;
    if (cfg.k) {
        if (n != 2) throw UsageError("--k is shorthand for GL2 weights (k, 0)");
        lambda = Weight{{*cfg.k, 0}};
    } else if (!cfg.weight.empty()) {
        lambda = parse_weight(d, cfg.weight);
    } else {
        throw UsageError("one of --k or --weight is required");
    }
    if (!d->is_dominant(lambda)) throw UsageError("weight " + join(lambda.coords) + " is not dominant");
    if (cfg.degree < 0) throw UsageError("--d must be nonnegative");
    const ParabolicType p = parse_parabolic(d, cfg.p_subset);
    ParabolicType q = p;
    if (cfg.q.empty()) {
        const auto miss = p.missing();
        if (miss.empty()) throw UsageError("P = G leaves no root to add");
        auto sub = p.subset();
        sub.push_back(miss.front());
        q = ParabolicType(d, sub);
    } else {
        q = parse_parabolic(d, cfg.q);
    }
    const GLInduction ind(n);
    BggReport rep;
    try {
        rep = ind.bgg_check(p, q, lambda, cfg.degree);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }
    ordered_json j;
    j["command"] = "bgg-check";
    j["group"] = d->name();
    j["weight"] = lambda.coords;
    j["d"] = cfg.degree;
    j["threshold"] = rep.threshold;
    j["dim_kernel"] = rep.dim_kernel;
    j["dim_RQ"] = rep.dim_RQ;
    j["above_threshold"] = rep.above_threshold;
    j["pass"] = rep.pass;
    emit(cfg, out, j, {"threshold", "dim_kernel", "dim_RQ", "above_threshold", "pass"},
         {{std::to_string(rep.threshold), std::to_string(rep.dim_kernel), std::to_string(rep.dim_RQ),
           rep.above_threshold ? "yes" : "no", rep.pass ? "pass" : "fail"}});
    return rep.pass ? kOk : kCheckedFailure;
}

// ---------------------------------------------------------------- lift

int cmd_lift(const RunConfig& cfg, std::ostream& out) {
    check_level(cfg);
    if (!cfg.k || *cfg.k < 0) throw UsageError("--k must be a nonnegative weight");
    const std::int64_t k = *cfg.k;
    const std::size_t M = moments_of(cfg);
    std::optional<Rational> want;
    if (cfg.choice == "ordinary") {
        want = Rational(0);
    } else if (cfg.choice.rfind("slope:", 0) == 0) {
        try {
            want = parse_rational(cfg.choice.substr(6));
        } catch (const std::exception&) {
            throw UsageError("invalid slope in --eigenvalue-choice");
        }
    } else {
        throw UsageError("--eigenvalue-choice must be ordinary or slope:<h>");
    }

    ordered_json j;
    j["command"] = "lift";
    j["N"] = cfg.N;
    j["p"] = cfg.p;
    j["k"] = k;
    j["M"] = M;
    j["eigenvalue_choice"] = cfg.choice;
    j["seed"] = cfg.seed;

    const auto psi = newform_symbol(cfg.N, k, cfg.p);
    const Rational ap = hecke_eigenvalue(psi, cfg.p);
    if (ap.get_den() != 1) throw ConsistencyError("non-integral a_p");
    j["a_p"] = to_string(ap);
    const auto roots = hecke_polynomial_roots(ap.get_num(), cfg.p, k, static_cast<std::int64_t>(M) + 10);
    std::optional<PadicScalar> alpha;
    for (const auto& r : {roots.small, roots.large}) {
        const auto v = r.valuation();
        if (v && Rational(*v) == *want) {
            alpha = r;
            break;
        }
    }
    auto table_rows = [&](const ordered_json& jj) {
        std::vector<std::vector<std::string>> rows;
        for (auto it = jj.begin(); it != jj.end(); ++it)
            rows.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
        return rows;
    };
    if (!alpha) {
        j["converged"] = false;
        j["rejected"] = true;
        j["reason"] = "no root of X^2 - a_p X + p^(k+1) has valuation " + to_string(*want);
        emit(cfg, out, j, {"field", "value"}, table_rows(j));
        return kCheckedFailure;
    }
    j["alpha"] = padic_json(*alpha);
    auto mb = std::make_shared<const ManinBasis>(cfg.N, cfg.p);
    LiftOptions opt;
    opt.moments = M;
    opt.seed = cfg.seed;
    LiftResult res;
    try {
        res = lift_symbol(mb, k, p_stabilize(psi, *mb, *alpha), *alpha, opt);
    } catch (const PreconditionError& e) {
        j["converged"] = false;
        j["rejected"] = true;
        j["reason"] = e.what();
        emit(cfg, out, j, {"field", "value"}, table_rows(j));
        return kCheckedFailure;
    }
    j["converged"] = res.converged;
    j["iterations"] = res.iterations;
    j["eigenvalue"] = padic_json(res.eigenvalue.capped(static_cast<std::int64_t>(M)));
    j["specialization_check"] = res.specialization_matches;
    emit(cfg, out, j, {"field", "value"}, table_rows(j));
    return res.converged && res.specialization_matches ? kOk : kCheckedFailure;
}

// ---------------------------------------------------------------- charpoly

std::vector<std::vector<std::string>> polygon_rows(const NewtonPolygon& np) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : np.vertices)
        rows.push_back({"vertex", std::to_string(v.index), std::to_string(v.value), "",
                        v.determined ? "determined" : "lower-bound"});
    for (const auto& s : np.segments)
        rows.push_back({"segment", std::to_string(s.start), to_string(s.root_valuation),
                        std::to_string(s.multiplicity()), s.ambiguous ? "uncertified" : "certified"});
    return rows;
}

ordered_json polygon_json(const NewtonPolygon& np) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : np.vertices)
        j["vertices"].push_back({{"x", v.index}, {"y", v.value}, {"determined", v.determined}});
    j["segments"] = ordered_json::array();
    for (const auto& s : np.segments)
        j["segments"].push_back({{"start", s.start},
                                 {"end", s.end},
                                 {"slope", to_string(s.root_valuation)},
                                 {"certified", !s.ambiguous}});
    return j;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out) {
    check_level(cfg);
    const std::size_t M = moments_of(cfg);
    if (cfg.xdeg < 1) throw UsageError("--xdeg must be positive");
    const ManinBasis manin(cfg.N, cfg.p);
    ordered_json j;
    j["command"] = "charpoly";
    j["N"] = cfg.N;
    j["p"] = cfg.p;
    j["M"] = M;
    j["xdeg"] = cfg.xdeg;
    std::vector<std::vector<std::string>> rows;
    const std::vector<std::string> header{"kind", "index", "value", "digits", "note"};

    if (!cfg.use_disc) {
        if (!cfg.k || *cfg.k < 0) throw UsageError("--k must be a nonnegative weight");
        const auto rep = charpoly_up(manin, *cfg.k, M, cfg.xdeg);
        j["k"] = *cfg.k;
        j["matrix_dim"] = rep.matrix_dim;
        j["coefficients"] = ordered_json::array();
        for (std::size_t i = 0; i < rep.fredholm.size(); ++i) {
            const auto& c = rep.fredholm.coeffs[i];
            const auto v = c.valuation();
            j["coefficients"].push_back({{"index", i},
                                         {"valuation", v ? ordered_json(*v) : ordered_json(nullptr)},
                                         {"digits", rep.coefficient_precision[i]}});
            rows.push_back({"coefficient", std::to_string(i), v ? std::to_string(*v) : "",
                            std::to_string(rep.coefficient_precision[i]), v ? "" : "zero to known precision"});
        }
        j["polygon"] = polygon_json(rep.polygon);
        std::vector<std::string> slopes;
        for (const auto& s : rep.certified_slopes) slopes.push_back(to_string(s));
        j["certified_slopes"] = slopes;
        j["diagnostics"] = rep.diagnostics;
        const auto prow = polygon_rows(rep.polygon);
        rows.insert(rows.end(), prow.begin(), prow.end());
        emit(cfg, out, j, header, rows);
        return kOk;
    }

    WeightDiscFamily disc;
    disc.p = cfg.p;
    disc.k0 = cfg.disc_center;
    disc.order = cfg.order;
    disc.radius = cfg.radius;
    disc.digits = std::max<std::int64_t>(40, 3 * static_cast<std::int64_t>(M));
    if (disc.order < 1 || disc.order > 12) throw UsageError("--order must lie in 1..12");
    if (disc.radius < 1) throw UsageError("--radius must be at least 1");
    if (cfg.p == 2) throw UsageError("weight discs need odd p");
    const auto rep = family_charpoly(manin, disc, M, cfg.xdeg);
    j["disc_center"] = disc.k0;
    j["radius"] = disc.radius;
    j["order"] = disc.order;
    j["order_used"] = rep.order_used;
    j["series"] = ordered_json::array();
    for (std::size_t i = 0; i < rep.fredholm.size(); ++i)
        for (std::size_t t = 0; t < rep.order_used; ++t) {
            const auto& c = rep.fredholm[i][t];
            const auto v = c.valuation();
            j["series"].push_back({{"index", i},
                                   {"w_power", t},
                                   {"valuation", v ? ordered_json(*v) : ordered_json(nullptr)},
                                   {"digits", c.absprec()}});
            rows.push_back({"series", std::to_string(i), v ? std::to_string(*v) : "", std::to_string(c.absprec()),
                            "w^" + std::to_string(t)});
        }
    const auto centre = newton_polygon(specialize_fredholm(rep, PadicScalar::zero(cfg.p, PadicScalar::kExactPrecision)),
                                       SlopeConvention::Fredholm);
    j["centre_polygon"] = polygon_json(centre);
    const auto prow = polygon_rows(centre);
    rows.insert(rows.end(), prow.begin(), prow.end());
    int rc = kOk;
    if (cfg.adapted_h) {
        Rational h;
        try {
            h = parse_rational(*cfg.adapted_h);
        } catch (const std::exception&) {
            throw UsageError("invalid --slope");
        }
        Integer w1 = cfg.p - 1;
        for (std::int64_t i = 0; i < std::max<std::int64_t>(2, disc.radius); ++i) w1 *= cfg.p;
        const auto a = slope_adapted(rep, h, PadicScalar::from_integer(cfg.p, w1, PadicScalar::kExactPrecision));
        j["adapted"] = {{"h", to_string(h)},
                        {"verdict", to_string(a.verdict)},
                        {"breakpoint", a.breakpoint ? ordered_json(*a.breakpoint) : ordered_json(nullptr)},
                        {"reason", a.reason}};
        rows.push_back({"adapted", a.breakpoint ? std::to_string(*a.breakpoint) : "", to_string(a.verdict), "",
                        a.reason});
        if (a.verdict != AdaptedVerdict::Adapted) rc = kCheckedFailure;
    }
    j["diagnostics"] = rep.diagnostics;
    emit(cfg, out, j, header, rows);
    return rc;
}

// ---------------------------------------------------------------- catalog

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
    std::vector<DatumPtr> data;
    if (!cfg.group.empty()) {
        data.push_back(resolve_group(cfg.group));
    } else {
        for (int n = 2; n <= 6; ++n) data.push_back(RootDatum::gl(n));
        data.push_back(RootDatum::gsp4());
    }
    ordered_json j;
    j["command"] = "catalog";
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : data) {
        ordered_json e;
        e["name"] = d->name();
        e["rank"] = d->rank();
        e["simple_roots"] = d->simple_roots();
        e["coroots"] = d->coroots();
        e["positive_roots"] = d->positive_roots().size();
        std::vector<std::string> named{"borel", "full"};
        if (d->name() == "GSp(4)") named.insert(named.end(), {"siegel", "klingen"});
        e["named_parabolics"] = named;
        j["groups"].push_back(e);
        std::string roots;
        for (const auto& r : d->simple_roots()) roots += (roots.empty() ? "" : " ") + std::string("(") + join(r) + ")";
        rows.push_back({d->name(), std::to_string(d->rank()), std::to_string(d->positive_roots().size()), roots});
    }
    emit(cfg, out, j, {"group", "rank", "positive_roots", "simple_roots"}, rows);
    return kOk;
}

} // namespace

std::size_t default_precision() {
    const char* env = std::getenv("PARAHORIC_PRECISION");
    if (!env || !*env) return 20;
    const std::int64_t v = parse_int(env, "PARAHORIC_PRECISION");
    if (v < 2) throw UsageError("PARAHORIC_PRECISION must be at least 2");
    return static_cast<std::size_t>(v);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "slopes") return cmd_slopes(cfg, out);
        if (cfg.command == "bgg-check") return cmd_bgg(cfg, out);
        if (cfg.command == "lift") return cmd_lift(cfg, out);
        if (cfg.command == "charpoly") return cmd_charpoly(cfg, out);
        if (cfg.command == "catalog") return cmd_catalog(cfg, out);
        err << "unknown command '" << cfg.command << "'\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnsupportedError& e) {
        err << "usage error: unsupported input: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kCheckedFailure;
    }
}

} // namespace parahoric::cli
