#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "mzeta/bounds.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/oracle.hpp"
#include "mzeta/report.hpp"
#include "mzeta/weights.hpp"
#include "mzeta/zeta.hpp"

using namespace mz;

namespace {

enum Exit { kOk = 0, kInput = 1, kCheckFail = 2, kIndeterminate = 3, kInternal = 4 };

struct Config {
    std::string poly;
    std::string vars_text;
    long long max_k = 12;
    std::vector<std::string> facet_measure;
    bool verify = false;
    bool assume_nondegenerate = false;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1;
    // zeta
    std::string sign = "naive";
    bool breakdown = false;
    // weights
    std::string series_file;
    // corpus
    std::string manifest;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// Variables in order x, y, z up to the last one used, or the identifiers in
// order of appearance when other names occur.
std::vector<std::string> infer_vars(const std::string& text) {
    std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::vector<std::string> seen;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
        std::string v = it->str();
        if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
    const std::vector<std::string> xyz = {"x", "y", "z"};
    int last = -1;
    bool only_xyz = true;
    for (const auto& v : seen) {
        auto p = std::find(xyz.begin(), xyz.end(), v);
        if (p == xyz.end()) only_xyz = false;
        else last = std::max(last, static_cast<int>(p - xyz.begin()));
    }
    if (only_xyz) return std::vector<std::string>(xyz.begin(), xyz.begin() + std::max(last, 0) + 1);
    return seen;
}

std::vector<std::string> vars_of(const Config& c, const std::string& poly) {
    return c.vars_text.empty() ? infer_vars(poly) : split_commas(c.vars_text);
}

UPoly parse_upoly(const std::string& text) {
    Poly p = parse_polynomial(text, {"u"});
    UPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1) throw Error("measure override needs integer coefficients");
        r.add_coeff(e[0], c.get_num().get_si());
    }
    return r;
}

MeasureOptions measure_options(const Config& c) {
    MeasureOptions o;
    for (const auto& item : c.facet_measure) {
        if (item == "exact") {
            o.mode = FacetMode::ExactCurve;
        } else if (item == "numeric") {
            o.mode = FacetMode::NumericTrace;
        } else {
            std::smatch m;
            static const std::regex re("^(?:\xCE\xB3|g)?([0-9]+):(.+)$");
            if (!std::regex_match(item, m, re))
                throw Error("--facet-measure expects exact, numeric or ID:VALUE, got '" + item + "'");
            o.overrides[std::stoi(m[1].str())] = parse_upoly(m[2].str());
        }
    }
    return o;
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw Error("cannot write " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
}

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::True: return "true";
        case Tri::False: return "false";
        default: return "indeterminate";
    }
}

struct Pipeline {
    std::vector<std::string> vars;
    Poly f;
    NewtonData nd;
    std::vector<FaceMeasure> ms;
};

// Parses, refines and measures; refuses germs the engine cannot handle.
Pipeline build_pipeline(const Config& c, const std::string& text) {
    Pipeline p;
    p.vars = vars_of(c, text);
    p.f = parse_germ(text, p.vars);
    p.nd = unimodular_refine(build_newton_polyhedron(p.f));
    if (!is_convenient(p.nd)) throw NotConvenientError("germ is not convenient");
    auto nondeg = nondegenerate_check(p.nd);
    if (nondeg.value == Tri::False) throw NondegeneracyRequiredError("germ is degenerate: " + nondeg.witness);
    if (nondeg.value == Tri::Indeterminate && !c.assume_nondegenerate)
        throw UncertifiedTraceError("non-degeneracy could not be decided (" + nondeg.witness +
                                    "); pass --assume-nondegenerate to proceed");
    p.ms = compute_measures(p.nd, measure_options(c));
    return p;
}

int cmd_check(const Config& c) {
    auto vars = vars_of(c, c.poly);
    Poly f = parse_germ(c.poly, vars);
    NewtonData nd = build_newton_polyhedron(f);
    bool conv = is_convenient(nd);
    NondegeneracyResult nondeg = nondegenerate_check(nd);
    auto wh = detect_wh(f);
    Json j;
    j["polynomial"] = f.to_string(vars);
    j["vars"] = vars;
    j["convenient"] = conv;
    j["nondegenerate"] = tri_name(nondeg.value);
    if (!nondeg.witness.empty()) j["witness"] = nondeg.witness;
    if (wh) j["weighted_homogeneous"] = {{"weights", wh->w}, {"degree", wh->d}, {"intercepts", wh->p},
                                          {"v", wh->v}, {"m_f_v", wh->m_f_v}, {"h_v", wh->h_v}};
    else j["weighted_homogeneous"] = nullptr;
    if (c.format == "text") {
        std::ostringstream o;
        o << "polynomial: " << f.to_string(vars) << "\n";
        o << "convenient: " << (conv ? "yes" : "no") << "\n";
        o << "non-degenerate: " << tri_name(nondeg.value) << "\n";
        if (!nondeg.witness.empty()) o << "witness: " << nondeg.witness << "\n";
        if (wh) {
            o << "weighted homogeneous: w = (";
            for (std::size_t i = 0; i < wh->w.size(); ++i) o << (i ? "," : "") << wh->w[i];
            o << "), d = " << wh->d << ", h(v) = " << wh->h_v << "\n";
        } else {
            o << "weighted homogeneous: no\n";
        }
        emit(c, o.str());
    } else {
        emit(c, j.dump(2));
    }
    if (!conv || nondeg.value == Tri::False) return kCheckFail;
    if (nondeg.value == Tri::Indeterminate) return kIndeterminate;
    return kOk;
}

int cmd_newton(const Config& c) {
    auto vars = vars_of(c, c.poly);
    Poly f = parse_germ(c.poly, vars);
    NewtonData nd = build_newton_polyhedron(f);
    if (is_convenient(nd)) nd = unimodular_refine(nd);
    if (c.format == "text") {
        std::ostringstream o;
        o << "vertices: " << nd.vertices.size() << ", compact faces: " << nd.faces.size()
          << ", fan cones: " << nd.fan.size() << "\n";
        for (const auto& face : nd.faces) {
            o << "face " << face.id << " (dim " << face.dim << "):";
            for (const auto& e : face.exponents) {
                o << " (";
                for (std::size_t i = 0; i < e.size(); ++i) o << (i ? "," : "") << e[i];
                o << ")";
            }
            o << "\n";
        }
        o << "L_e = " << rat_to_string(leading_exponent(nd).value) << "\n";
        emit(c, o.str());
    } else {
        emit(c, newton_json(nd, vars));
    }
    return kOk;
}

// Oracle checks embedded by --verify; returns false on any disagreement.
bool verification(const Pipeline& p, const ZetaSeries& naive, const Config& c, Json& out) {
    bool ok = true;
    Json trunc = Json::array();
    long long kmax = std::min<long long>(naive.K, 12);
    for (long long D : {6LL, 9LL, 12LL}) {
        long long bad = 0;
        for (long long k = 1; k <= kmax; ++k) {
            int low = p.nd.n - static_cast<int>(D);
            if (truncate_below(truncated_coefficient(p.nd, p.ms, k, D), low) != truncate_below(naive.at(k).value, low))
                ++bad;
        }
        ok = ok && bad == 0;
        trunc.push_back({{"D", D}, {"k_max", kmax}, {"mismatches", bad}});
    }
    out["truncated_oracle"] = trunc;
    FukuiSample fs = sample_fukui(p.f, kmax, 2000, c.seed);
    std::vector<long long> outside;
    for (long long o : fs.orders)
        if (naive.at(o).value.is_zero()) outside.push_back(o);
    ok = ok && outside.empty();
    out["fukui_sample"] = {{"seed", fs.seed},     {"trials", fs.trials}, {"orders", fs.orders},
                           {"outside_predicted", outside}};
    auto db = degree_bound_report(naive, p.nd, p.ms);
    ok = ok && db.violations.empty();
    out["degree_bound"] = {{"L_e", rat_to_string(db.L_e)}, {"violations", db.violations}};
    out["ok"] = ok;
    return ok;
}

int cmd_zeta(const Config& c) {
    Pipeline p = build_pipeline(c, c.poly);
    ZetaEngine engine(p.nd, p.ms, c.max_k);
    std::vector<Sign> signs;
    if (c.sign == "naive" || c.sign == "all") signs.push_back(Sign::Naive);
    if (c.sign == "plus" || c.sign == "all") signs.push_back(Sign::Plus);
    if (c.sign == "minus" || c.sign == "all") signs.push_back(Sign::Minus);
    if (signs.empty()) throw Error("--sign expects naive, plus, minus or all");
    std::vector<ZetaSeries> series;
    Json unsupported = Json::array();
    for (Sign s : signs) {
        try {
            series.push_back(engine.series(s, c.breakdown));
        } catch (const UnsupportedMeasureError& e) {
            if (signs.size() == 1) throw;
            unsupported.push_back({{"sign", sign_name(s)}, {"reason", e.what()}});
        }
    }
    std::optional<Json> ver;
    bool ok = true;
    if (c.verify) {
        Json v;
        const ZetaSeries naive = signs.front() == Sign::Naive ? series.front() : engine.series(Sign::Naive, false);
        ok = verification(p, naive, c, v);
        ver = v;
    }
    if (c.format == "text") {
        std::string text;
        for (const auto& s : series) text += series_text(s);
        for (const auto& u : unsupported) text += "# " + u["sign"].get<std::string>() + " series unsupported: " +
                                                  u["reason"].get<std::string>() + "\n";
        if (ver) text += "# verification: " + std::string((*ver)["ok"].get<bool>() ? "ok" : "FAILED") + "\n";
        emit(c, text);
    } else {
        Json doc = zeta_document(p.f.to_string(p.vars), p.vars, p.nd, p.ms, series, c.breakdown, ver);
        if (!unsupported.empty()) doc["unsupported"] = unsupported;
        emit(c, doc.dump(2));
    }
    return ok ? kOk : kCheckFail;
}

struct WeightsOutcome {
    WeightReport report;
    std::optional<WHStructure> truth;
};

WeightsOutcome run_weights(const Config& c, const std::string& poly) {
    WeightsOutcome w;
    if (!c.series_file.empty()) {
        std::ifstream in(c.series_file);
        if (!in) throw Error("cannot read " + c.series_file);
        Json doc = Json::parse(in);
        w.report = recover_weights(series_from_zeta_document(doc));
        return w;
    }
    Pipeline p = build_pipeline(c, poly);
    w.truth = detect_wh(p.f);
    long long K = c.max_k;
    if (w.truth) {
        std::vector<long long> ps(w.truth->p.begin(), w.truth->p.end());
        if (std::none_of(ps.begin(), ps.end(), [](long long x) { return x == 0; }))
            K = std::max(K, weights_horizon(ps));
    }
    ZetaEngine engine(p.nd, p.ms, K);
    w.report = recover_weights(engine.series(Sign::Naive, false));
    if (w.truth && !w.report.recovered.empty()) {
        std::vector<long long> truth_p = w.truth->p;
        std::sort(truth_p.begin(), truth_p.end());
        w.report.consistent = truth_p == w.report.recovered;
    }
    return w;
}

int cmd_weights(const Config& c) {
    if (c.poly.empty() == c.series_file.empty()) throw Error("give either a polynomial or --series, not both");
    WeightsOutcome w = run_weights(c, c.poly);
    if (c.format == "text") emit(c, weights_text(w.report));
    else emit(c, weights_document(w.report, w.truth).dump(2));
    return w.report.consistent.value_or(true) ? kOk : kCheckFail;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CancellationFailure*>(&e)) return kInternal;
    if (dynamic_cast<const NotConvenientError*>(&e) || dynamic_cast<const NondegeneracyRequiredError*>(&e) ||
        dynamic_cast<const DegenerateFaceError*>(&e))
        return kCheckFail;
    if (dynamic_cast<const AmbiguousError*>(&e) || dynamic_cast<const HorizonTooSmall*>(&e) ||
        dynamic_cast<const UncertifiedTraceError*>(&e) || dynamic_cast<const UnsupportedMeasureError*>(&e))
        return kIndeterminate;
    return kInput;
}

// One manifest entry: {"poly": ..., "vars": [...], "max_k": K, "expect": {...}}.
Json run_corpus_entry(const Config& base, const Json& entry, bool& ok) {
    Json r;
    ok = true;
    std::string poly = entry.at("poly").get<std::string>();
    r["poly"] = poly;
    Config c = base;
    if (entry.contains("vars")) {
        std::string joined;
        for (const auto& v : entry["vars"]) joined += (joined.empty() ? "" : ",") + v.get<std::string>();
        c.vars_text = joined;
    }
    if (entry.contains("max_k")) c.max_k = entry["max_k"].get<long long>();
    Json expect = entry.value("expect", Json::object());
    Json mismatches = Json::array();
    try {
        auto vars = vars_of(c, poly);
        Poly f = parse_germ(poly, vars);
        NewtonData nd = build_newton_polyhedron(f);
        bool conv = is_convenient(nd);
        auto nondeg = nondegenerate_check(nd);
        r["convenient"] = conv;
        r["nondegenerate"] = tri_name(nondeg.value);
        if (expect.contains("convenient") && expect["convenient"].get<bool>() != conv)
            mismatches.push_back("convenient");
        if (expect.contains("nondegenerate")) {
            bool want = expect["nondegenerate"].get<bool>();
            if ((want && nondeg.value != Tri::True) || (!want && nondeg.value != Tri::False))
                mismatches.push_back("nondegenerate");
        }
        bool wants_weights = expect.contains("weights") || expect.contains("verdict");
        if (wants_weights && conv && nondeg.value == Tri::True) {
            WeightsOutcome w = run_weights(c, poly);
            r["weights"] = w.report.recovered;
            r["verdict"] = w.report.verdict;
            r["branch"] = w.report.evidence.branch;
            if (expect.contains("weights") && expect["weights"].get<std::vector<long long>>() != w.report.recovered)
                mismatches.push_back("weights");
            if (expect.contains("verdict") && expect["verdict"].get<std::string>() != w.report.verdict)
                mismatches.push_back("verdict");
        } else if (wants_weights) {
            mismatches.push_back("weights");
        }
    } catch (const std::exception& e) {
        r["error"] = e.what();
        r["exit_code"] = exit_code_for(e);
        if (!expect.contains("error")) mismatches.push_back("error");
    }
    r["mismatches"] = mismatches;
    ok = mismatches.empty();
    r["ok"] = ok;
    return r;
}

int cmd_corpus(const Config& c) {
    std::ifstream in(c.manifest);
    if (!in) throw Error("cannot read manifest " + c.manifest);
    std::string line, out;
    long long total = 0, passed = 0;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        bool ok = false;
        Json r = run_corpus_entry(c, Json::parse(line), ok);
        ++total;
        if (ok) ++passed;
        out += r.dump() + "\n";
    }
    Json summary = {{"summary", {{"entries", total}, {"passed", passed}, {"failed", total - passed}}}};
    out += summary.dump() + "\n";
    emit(c, out);
    return passed == total ? kOk : kCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real motivic zeta functions of polynomial germs from the Newton polyhedron"};
    app.require_subcommand(1);
    Config cfg;

    auto shared = [&](CLI::App* sub) {
        sub->add_option("--vars", cfg.vars_text, "Comma separated variable names (default: inferred)");
        sub->add_option("--max-k", cfg.max_k, "Horizon K of the series")->check(CLI::PositiveNumber);
        sub->add_option("--facet-measure", cfg.facet_measure, "exact | numeric | ID:VALUE (repeatable)");
        sub->add_flag("--verify", cfg.verify, "Run the oracle checks");
        sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", cfg.out, "Output file (default: stdout)");
        sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
        sub->add_flag("--assume-nondegenerate", cfg.assume_nondegenerate,
                      "Proceed when non-degeneracy cannot be decided");
    };

    auto* check = app.add_subcommand("check", "Convenience, non-degeneracy and weighted homogeneity");
    check->add_option("poly", cfg.poly, "Polynomial")->required();
    shared(check);
    auto* newton = app.add_subcommand("newton", "Newton polyhedron and its fan (newton/1)");
    newton->add_option("poly", cfg.poly, "Polynomial")->required();
    shared(newton);
    auto* zeta = app.add_subcommand("zeta", "Coefficients [A_k] for k = 1..K (zeta/1)");
    zeta->add_option("poly", cfg.poly, "Polynomial")->required();
    zeta->add_option("--sign", cfg.sign, "naive | plus | minus | all");
    zeta->add_flag("--breakdown", cfg.breakdown, "Include per-face P and Q sums");
    shared(zeta);
    auto* weights = app.add_subcommand("weights", "Recover the weights from the series (weights/1)");
    weights->add_option("poly", cfg.poly, "Polynomial");
    weights->add_option("--series", cfg.series_file, "Saved zeta/1 document (black-box mode)");
    shared(weights);
    auto* corpus = app.add_subcommand("corpus", "Run a JSONL manifest, one result line per entry");
    corpus->add_option("manifest", cfg.manifest, "Manifest file")->required();
    shared(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*check) return cmd_check(cfg);
        if (*newton) return cmd_newton(cfg);
        if (*zeta) return cmd_zeta(cfg);
        if (*weights) return cmd_weights(cfg);
        if (*corpus) return cmd_corpus(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kInput;
}
