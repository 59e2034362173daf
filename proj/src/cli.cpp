#include "g1chow/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "g1chow/corering.hpp"
#include "g1chow/keel.hpp"
#include "g1chow/modular.hpp"

namespace g1chow::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 0;
    std::string space;
    std::string ell;
    std::string nod;
    std::string stratum;
    std::string poly;
    std::string format = "text";
    std::string fixtures;
    std::string delta;
    std::string what;
    int degree = -1;
    int jobs = 0;
    bool serial = false;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QSpec parse_space(const std::string& text, int n) {
    if (text == "dm") return dm_space(n);
    if (text == "lp") return lp_minimal(n);
    if (text.rfind("smyth:", 0) == 0) {
        int m = 0;
        try {
            m = std::stoi(text.substr(6));
        } catch (const std::exception&) {
            throw UsageError("bad Smyth level in --space " + text);
        }
        return smyth(n, m);
    }
    if (text.rfind("qfile:", 0) == 0) {
        QSpec q = QSpec::from_json(read_text(text.substr(6)));
        if (n != 0 && q.n != n) throw UsageError("Q file is for n = " + std::to_string(q.n));
        QValidation v = validate_qspec(q);
        if (!v.valid) throw PartitionError("invalid Q file: " + v.problems.front());
        return q;
    }
    throw UsageError("unknown --space " + text + " (dm, lp, smyth:<m>, qfile:<path>)");
}

PatchOptions patch_options(const Options& o) {
    PatchOptions p;
    p.execution = o.serial ? Execution::serial : Execution::parallel;
    return p;
}

bool json_out(const Options& o) { return o.format == "json"; }

// A verification table: one line per check.
class Table {
public:
    void add(std::string name, std::string source, bool ok, std::string detail = {}) {
        rows_.push_back({std::move(name), std::move(source), ok, std::move(detail)});
    }
    bool all_passed() const {
        for (const auto& r : rows_)
            if (!r.passed) return false;
        return true;
    }
    void print(std::ostream& out, bool json) const {
        if (json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& r : rows_) j.push_back({{"check", r.name}, {"source", r.source}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
            out << nlohmann::json{{"checks", j}, {"passed", all_passed()}}.dump(2) << "\n";
            return;
        }
        for (const auto& r : rows_) {
            out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << r.name << " [" << r.source << "]";
            if (!r.detail.empty()) out << "  " << r.detail;
            out << "\n";
        }
        out << (all_passed() ? "all checks passed" : "some checks FAILED") << "\n";
    }

private:
    std::vector<CheckResult> rows_;
};

std::vector<int> ns_or(const Options& o, std::vector<int> fallback) { return o.n ? std::vector<int>{o.n} : fallback; }

std::string invariants_text(const InvariantFactors& f) {
    std::string s = "Z^" + std::to_string(f.rank);
    for (const auto& t : f.torsion) s += " + Z/" + t.get_str();
    return s;
}

nlohmann::json invariants_json(const InvariantFactors& f) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& x : f.torsion) t.push_back(x.get_str());
    return {{"degree", f.degree}, {"rank", f.rank}, {"torsion", t}};
}

int cmd_present(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("present needs --n");
    if (!o.space.empty()) {
        QPresentation qp = qstable_presentation(parse_space(o.space, o.n), patch_options(o));
        if (json_out(o)) {
            out << qp.to_json() << "\n";
            return kOk;
        }
        out << "space " << o.space << " (n = " << o.n << ", " << QSpec::convention << ")\ngenerators:";
        for (const auto& s : qp.generators) out << " " << s.name();
        out << "\nrelations:\n";
        for (const auto& r : qp.presentation.relations()) out << "  " << r.to_string() << "\n";
        if (!qp.skipped_ell.empty()) out << "note: " << qp.skipped_ell.size() << " level(s) without a tabulated Ell class were skipped\n";
        return kOk;
    }
    GradedPresentation g = gorenstein_presentation(o.n, patch_options(o));
    if (json_out(o)) {
        out << g.to_json() << "\n";
        return kOk;
    }
    out << "Gorenstein space, n = " << o.n << "\ngenerators:";
    for (const auto& s : g.symbols()) out << " " << s.name();
    out << "\nrelations (" << g.relations().size() << "):\n";
    for (const auto& r : g.relations()) out << "  " << r.to_string() << "\n";
    return kOk;
}

int cmd_class(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("class needs --n");
    if (o.ell.empty() == o.nod.empty()) throw UsageError("class needs exactly one of --ell or --nod");
    Stratification st(o.n);
    const bool ell = !o.ell.empty();
    SetPartition s = SetPartition::parse(ell ? o.ell : o.nod, o.n);
    RestrictionData data = ell ? ell_closure_data(st, s) : nod_closure_data(st, s);
    IntPolynomial f = fundamental_class(st, data, patch_options(o));
    if (json_out(o))
        out << nlohmann::json{{"n", o.n}, {ell ? "ell" : "nod", s.to_string()}, {"class", f.to_string()}, {"terms", nlohmann::json::parse(f.to_json())}}.dump(2) << "\n";
    else
        out << f.to_string() << "\n";
    return kOk;
}

int cmd_hilbert(const Options& o, std::ostream& out) {
    if (o.n < 1) throw UsageError("hilbert needs --n");
    const int top = o.degree >= 0 ? o.degree : o.n;
    HilbertPoincare h;
    if (o.space.empty())
        h = hilbert_poincare(gorenstein_presentation(o.n, patch_options(o)), top);
    else
        h = hilbert_poincare(qstable_presentation(parse_space(o.space, o.n), patch_options(o)).presentation, top);
    if (json_out(o)) {
        nlohmann::json d = nlohmann::json::array();
        for (const auto& f : h.degrees) d.push_back(invariants_json(f));
        out << nlohmann::json{{"ranks", h.ranks}, {"palindromic", h.palindromic}, {"degrees", d}}.dump(2) << "\n";
        return kOk;
    }
    for (const auto& f : h.degrees) out << "A^" << f.degree << " = " << invariants_text(f) << "\n";
    out << "ranks:";
    for (long r : h.ranks) out << " " << r;
    out << (h.palindromic ? "  (palindromic)" : "  (not palindromic)") << "\n";
    return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
    if (o.n < 1 || o.stratum.empty() || o.poly.empty()) throw UsageError("restrict needs --n, --stratum and --poly");
    TailModel m(o.n, SetPartition::parse(o.stratum, o.n));
    IntPolynomial f;
    try {
        f = IntPolynomial::parse(o.poly);
    } catch (const AlgebraError& e) {
        throw UsageError(std::string("--poly: ") + e.what());
    }
    IntPolynomial g = m.ring().normal_form(m.restrict(f));
    if (json_out(o))
        out << nlohmann::json{{"stratum", m.partition().to_string()}, {"restriction", g.to_string()}}.dump(2) << "\n";
    else
        out << g.to_string() << "\n";
    return kOk;
}

void verify_appendix(const Options& o, Table& t) {
    for (int n : ns_or(o, {1, 2, 3, 4})) {
        Stratification st(n);
        for (const auto& s : st.all()) {
            auto expected = fixture_class(s);
            if (!expected) continue;
            IntPolynomial f = fundamental_class(st, ell_closure_data(st, s), patch_options(o));
            auto bad = nonvanishing_strata(st, f - *expected, patch_options(o).execution);
            t.add("Ell closure n=" + std::to_string(n) + " " + s.to_string(), "stored fixture", bad.empty(),
                  bad.empty() ? "" : "differs on " + bad.front().to_string());
        }
    }
}

void verify_relations(const Options& o, Table& t) {
    for (int n : ns_or(o, {1, 2, 3, 4})) {
        Stratification st(n);
        auto rels = gorenstein_relations(n, patch_options(o)).all();
        std::size_t failed = 0;
        std::string first;
        for (const auto& r : rels) {
            auto bad = nonvanishing_strata(st, r, patch_options(o).execution);
            if (!bad.empty() && failed++ == 0) first = r.to_string() + " on " + bad.front().to_string();
        }
        t.add("relations vanish on strata, n=" + std::to_string(n), "stratum restriction", failed == 0,
              std::to_string(rels.size()) + " relations" + (failed ? ", first failure " + first : ""));
    }
}

void verify_getzler(const Options& o, Table& t) {
    std::optional<RestrictionData> delta;
    if (!o.delta.empty()) {
        auto j = nlohmann::json::parse(read_text(o.delta));
        RestrictionData d;
        d.seed = IntPolynomial::parse(j.at("seed").get<std::string>());
        for (const auto& [k, v] : j.value("gamma", nlohmann::json::object()).items()) d.gamma[SetPartition::parse(k, 4)] = IntPolynomial::parse(v.get<std::string>());
        delta = std::move(d);
    }
    GetzlerReport rep = getzler_check(delta, patch_options(o));
    for (const auto& c : rep.checks) t.add(c.name, c.source, c.passed, c.detail);
}

void verify_torsion(const Options& o, Table& t) {
    for (int n : ns_or(o, {2, 3, 4})) {
        auto dm = torsion_report(qstable_presentation(dm_space(n), patch_options(o)), 2);
        t.add("A^2 of DM space, n=" + std::to_string(n), "torsion Z/24", dm.torsion == std::vector<Integer>{24}, invariants_text(dm));
        for (int m = 1; m <= n - 1; ++m) {
            auto f = torsion_report(qstable_presentation(smyth(n, m), patch_options(o)), 2);
            t.add("A^2 of Smyth m=" + std::to_string(m) + ", n=" + std::to_string(n), "torsion free", f.torsion.empty(), invariants_text(f));
        }
    }
}

void verify_duality(const Options& o, Table& t) {
    for (int n : ns_or(o, {1, 2, 3, 4})) {
        std::vector<std::pair<std::string, QSpec>> spaces;
        if (!o.space.empty())
            spaces.emplace_back(o.space, parse_space(o.space, n));
        else {
            spaces.emplace_back("dm", dm_space(n));
            for (int m = 1; m <= n - 1; ++m) spaces.emplace_back("smyth:" + std::to_string(m), smyth(n, m));
        }
        for (const auto& [name, q] : spaces) {
            auto h = hilbert_poincare(qstable_presentation(q, patch_options(o)));
            std::string ranks;
            for (long r : h.ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
            t.add("palindromic ranks " + name + ", n=" + std::to_string(n), "duality", h.palindromic, "[" + ranks + "]");
        }
    }
}

void verify_counts(const Options& o, Table& t) {
    for (int m : ns_or(o, {4, 5, 6, 7})) {
        if (m < 4 || m > 8) throw UsageError("counts: markings must lie in 4..8");
        KeelRing k(full_subset(m - 1));
        auto h = k.presentation().hilbert_function(m - 3);
        auto c = mzero_point_polynomial(m);
        bool ok = c.size() == h.size();
        std::string detail;
        for (std::size_t d = 0; d < c.size(); ++d) {
            if (d < h.size() && c[d] != h[d]) ok = false;
            detail += (detail.empty() ? "" : " ") + c[d].get_str();
        }
        t.add("M0," + std::to_string(m) + " point count vs ranks", "genus-zero oracle", ok, "coefficients " + detail);
    }
}

int cmd_verify(const Options& o, std::ostream& out) {
    Table t;
    if (o.what == "appendix")
        verify_appendix(o, t);
    else if (o.what == "relations")
        verify_relations(o, t);
    else if (o.what == "getzler")
        verify_getzler(o, t);
    else if (o.what == "torsion")
        verify_torsion(o, t);
    else if (o.what == "duality")
        verify_duality(o, t);
    else if (o.what == "counts")
        verify_counts(o, t);
    else
        throw UsageError("unknown check " + o.what);
    t.print(out, json_out(o));
    return t.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral Chow rings of genus-one Gorenstein moduli and their compactifications", "g1chow"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of markings")->check(CLI::Range(1, 8));
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", o.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
        sub->add_flag("--serial", o.serial, "use the serial reference path");
        sub->add_option("--fixtures", o.fixtures, "directory with min_classes.json and ell_classes.json");
    };
    auto* present = app.add_subcommand("present", "emit the presentation of G or of a Q-space");
    common(present);
    present->add_option("--space", o.space, "dm | lp | smyth:<m> | qfile:<path>");
    auto* cls = app.add_subcommand("class", "fundamental class of an Ell or Nod closure");
    common(cls);
    cls->add_option("--ell", o.ell, "partition, e.g. \"1|2 3\"");
    cls->add_option("--nod", o.nod, "partition, e.g. \"1 2|3 4\"");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("what", o.what, "appendix | relations | getzler | torsion | duality | counts")
        ->required()
        ->check(CLI::IsMember({"appendix", "relations", "getzler", "torsion", "duality", "counts"}));
    verify->add_option("--space", o.space, "restrict duality to one space");
    verify->add_option("--delta", o.delta, "JSON restriction data for the non-separating node divisor");
    auto* hilbert = app.add_subcommand("hilbert", "ranks and torsion by degree");
    common(hilbert);
    hilbert->add_option("--space", o.space, "dm | lp | smyth:<m> | qfile:<path>");
    hilbert->add_option("--degree", o.degree, "top degree (default n)");
    auto* restrict_cmd = app.add_subcommand("restrict", "restrict a polynomial to a tail stratum");
    common(restrict_cmd);
    restrict_cmd->add_option("--stratum", o.stratum, "partition")->required();
    restrict_cmd->add_option("--poly", o.poly, "polynomial in l, v, t{...}")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (o.jobs > 0) omp_set_num_threads(o.jobs);
        if (!o.fixtures.empty())
            install_fixture_directory(o.fixtures);
        else if (const char* env = std::getenv("G1CHOW_FIXTURES"); env && *env)
            install_fixture_directory(env);
        if (present->parsed()) return cmd_present(o, out);
        if (cls->parsed()) return cmd_class(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (hilbert->parsed()) return cmd_hilbert(o, out);
        if (restrict_cmd->parsed()) return cmd_restrict(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PartitionError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace g1chow::cli
