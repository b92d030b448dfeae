#include "sumsets/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/harness.hpp"
#include "sumsets/json_io.hpp"
#include "sumsets/modular.hpp"
#include "sumsets/structure.hpp"

namespace sumsets {
namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer literal: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

IntegerSet parse_set(const std::string& text) { return IntegerSet{parse_int_list(text)}; }

std::vector<IntegerSet> parse_families(const std::string& text) {
    std::vector<IntegerSet> out;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ';')) out.push_back(parse_set(part));
    if (out.empty()) throw std::invalid_argument("empty family list");
    return out;
}

void write_output(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    file << body;
}

struct SumsetOptions {
    std::string set_literal;
    std::string families_literal;
    std::string poly_literal;
    std::string mode = "squares";
    std::string format = "json";
    std::string out_path;
    int n = 0;
};

int cmd_sumset(const SumsetOptions& opt, std::ostream& out) {
    SumSet values;
    BoundReport report;
    bool have_report = false;

    if (!opt.families_literal.empty()) {
        if (opt.mode != "poly")
            throw std::invalid_argument("--families requires --mode poly");
        std::vector<IntegerSet> families = parse_families(opt.families_literal);
        MonicPolynomial p{parse_int_list(opt.poly_literal)};
        values = generalized_sumset(families, p);
        int n = int(families.size());
        std::int64_t k = 0;
        for (const IntegerSet& f : families) k = std::max<std::int64_t>(k, std::int64_t(f.size()));
        Bound bk = liu_sun_K(n, k, p.degree());
        report.n = n;
        report.k = k;
        report.bound = bk.value + 1;
        report.actual = std::int64_t(values.cardinality());
        report.slack = report.actual - report.bound;
        report.equality = report.slack == 0;
        // K+1 guards the sumset only when sizes ascend in 0/1 steps as well.
        std::vector<std::size_t> sizes;
        for (const IntegerSet& f : families) sizes.push_back(f.size());
        std::sort(sizes.begin(), sizes.end());
        bool steps_ok = true;
        for (std::size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] - sizes[i - 1] > 1) steps_ok = false;
        report.applicable = bk.applicable && steps_ok && sizes.back() == std::size_t(k);
        have_report = true;
    } else {
        IntegerSet a = parse_set(opt.set_literal);
        if (opt.n < 1) throw std::invalid_argument("--n must be a positive integer");
        if (opt.mode == "squares") {
            values = restricted_sumset(a, opt.n);
            report = bound_report(a, opt.n, SumMode::squares);
            have_report = true;
        } else if (opt.mode == "distinct") {
            values = distinct_sumset(a, opt.n);
            report = bound_report(a, opt.n, SumMode::distinct);
            have_report = true;
        } else if (opt.mode == "poly") {
            MonicPolynomial p{parse_int_list(opt.poly_literal)};
            std::vector<IntegerSet> families(std::size_t(opt.n), a);
            values = generalized_sumset(families, p);
            Bound bk = liu_sun_K(opt.n, std::int64_t(a.size()), p.degree());
            report.n = opt.n;
            report.k = std::int64_t(a.size());
            report.bound = bk.value + 1;
            report.actual = std::int64_t(values.cardinality());
            report.slack = report.actual - report.bound;
            report.equality = report.slack == 0;
            report.applicable = bk.applicable;
            have_report = true;
        } else {
            throw std::invalid_argument("--mode must be squares, distinct or poly");
        }
    }

    if (opt.format == "json") {
        ojson j;
        j["values"] = values.values();
        if (have_report) {
            ojson r = bound_report_to_json(report);
            for (auto& [key, val] : r.items()) j[key] = val;
        }
        write_output(j.dump() + "\n", opt.out_path, out);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "values,n,k,bound,actual,slack,equality,applicable\n\"";
        auto vs = values.values();
        for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
        os << "\"," << report.n << ',' << report.k << ',' << report.bound << ','
           << report.actual << ',' << report.slack << ',' << (report.equality ? "true" : "false")
           << ',' << (report.applicable ? "true" : "false") << "\n";
        write_output(os.str(), opt.out_path, out);
    } else {
        std::ostringstream os;
        os << "values: {";
        auto vs = values.values();
        for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
        os << "}\ncardinality: " << values.cardinality();
        if (have_report)
            os << "\nbound: " << report.bound << (report.applicable ? "" : " (not applicable)")
               << "\nequality: " << (report.equality ? "true" : "false");
        os << "\n";
        write_output(os.str(), opt.out_path, out);
    }
    return 0;
}

struct ClassifyOptions {
    std::string set_literal;
    std::string mode = "squares";
    std::string format = "json";
    std::string out_path;
    int n = 0;
};

int cmd_classify(const ClassifyOptions& opt, std::ostream& out) {
    IntegerSet a = parse_set(opt.set_literal);
    if (opt.n < 1) throw std::invalid_argument("--n must be a positive integer");

    StructureForm form = NotExtremal{""};
    BoundReport report;
    if (opt.mode == "squares") {
        form = opt.n == 2 ? classify_s2(a) : classify_sn(a, opt.n);
        report = bound_report(a, opt.n, SumMode::squares);
    } else if (opt.mode == "distinct") {
        form = classify_nwedge(a, opt.n);
        report = bound_report(a, opt.n, SumMode::distinct);
    } else {
        throw std::invalid_argument("--mode must be squares or distinct for classify");
    }

    if (opt.format == "json") {
        ojson j;
        j["form"] = form_to_json(form);
        ojson r = bound_report_to_json(report);
        for (auto& [key, val] : r.items()) j[key] = val;
        write_output(j.dump() + "\n", opt.out_path, out);
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "tag,n,k,bound,actual,slack,equality,applicable\n"
           << tag_of(form) << ',' << report.n << ',' << report.k << ',' << report.bound << ','
           << report.actual << ',' << report.slack << ',' << (report.equality ? "true" : "false")
           << ',' << (report.applicable ? "true" : "false") << "\n";
        write_output(os.str(), opt.out_path, out);
    } else {
        std::ostringstream os;
        os << "tag: " << tag_of(form) << "\nslack: " << report.slack << "\n";
        write_output(os.str(), opt.out_path, out);
    }
    return 0;
}

struct CampaignOptions {
    std::string theorem;
    std::string spec_path;
    std::string format = "text";
    std::string out_path;
    int n_lo = 0, n_hi = 0;
    std::int64_t k_lo = 0, k_hi = 0;
    std::int64_t max_abs = 0;
    int workers = 1;
    std::uint64_t budget = 100000000ULL;
    bool no_timing = false;
};

CampaignSpec build_spec(const CampaignOptions& opt, bool survey) {
    CampaignSpec spec;
    if (!opt.spec_path.empty()) {
        std::ifstream file(opt.spec_path);
        if (!file) throw std::invalid_argument("cannot read campaign file: " + opt.spec_path);
        ojson j = ojson::parse(file);
        spec = campaign_spec_from_json(j);
    } else {
        auto id = theorem_from_name(opt.theorem);
        if (!id) throw std::invalid_argument("unknown theorem id: " + opt.theorem);
        spec.theorem = *id;
        spec.n_lo = opt.n_lo;
        spec.n_hi = std::max(opt.n_lo, opt.n_hi);
        spec.k_lo = opt.k_lo;
        spec.k_hi = std::max(opt.k_lo, opt.k_hi);
        spec.max_abs = opt.max_abs;
        spec.budget = opt.budget;
    }
    spec.workers = opt.workers;
    if (const char* env = std::getenv("SUMSET_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) spec.workers = w;
    }
    spec.survey = survey;
    if (!opt.out_path.empty()) spec.output_path = opt.out_path;
    return spec;
}

int cmd_campaign(const CampaignOptions& opt, bool survey, std::ostream& out) {
    CampaignSpec spec = build_spec(opt, survey);
    CampaignReport report = run_campaign(spec);

    std::string body;
    if (opt.format == "json") body = report.to_jsonl(!opt.no_timing);
    else if (opt.format == "csv") body = report.to_csv(!opt.no_timing);

    if (!spec.output_path.empty()) {
        std::string file_body = body;
        if (file_body.empty()) file_body = report.to_jsonl(!opt.no_timing);
        std::ofstream file(spec.output_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + spec.output_path);
        file << file_body;
    }

    if (opt.format == "text" || spec.output_path.empty()) {
        if (opt.format == "text") {
            out << "theorem: " << theorem_name(spec.theorem) << "\n"
                << "sets examined: " << report.sets_examined << "\n"
                << "equality hits: " << report.equality_hits << "\n"
                << "witnesses: " << report.witnesses.size() << "\n"
                << "counterexamples: " << report.counterexamples.size() << "\n";
            if (!opt.no_timing) out << "elapsed_ms: " << report.elapsed_ms << "\n";
            out << "falsified: " << (report.falsified() ? "true" : "false") << "\n";
            for (const CounterexampleRecord& c : report.counterexamples) {
                out << "  counterexample n=" << c.n << " set=";
                for (std::size_t i = 0; i < c.set.size(); ++i)
                    out << (i ? "," : "") << c.set[i];
                out << " : " << c.detail << "\n";
            }
        } else {
            out << body;
        }
    }

    if (!survey && report.falsified()) return 2;
    return 0;
}

struct ZpzOptions {
    std::int64_t p = 0;
    std::string set_literal;
    std::string format = "json";
    std::string out_path;
    bool selfridge = false;
    bool balandraud = false;
    bool sums = false;
    bool verify = false;
};

int cmd_zpz(const ZpzOptions& opt, std::ostream& out) {
    int chosen = int(opt.selfridge) + int(opt.balandraud) + int(opt.sums);
    if (chosen != 1)
        throw std::invalid_argument("choose exactly one of --selfridge, --balandraud, --sums");
    if (opt.verify && !opt.selfridge)
        throw std::invalid_argument("--verify only applies to --selfridge");

    ojson j;
    std::ostringstream text;
    if (opt.selfridge) {
        std::int64_t v = erdos_selfridge_max(opt.p, opt.verify);
        j["p"] = opt.p;
        j["selfridge_max"] = v;
        j["verified"] = opt.verify;
        text << v << "\n";
    } else {
        if (opt.set_literal.empty())
            throw std::invalid_argument("--balandraud and --sums need --set");
        ResidueSet rs(opt.p, parse_int_list(opt.set_literal));
        if (opt.balandraud) {
            BoundReport report = check_balandraud(rs);
            j = bound_report_to_json(report);
            j["p"] = opt.p;
            j["pair_sum_free"] = report.applicable;
            text << "bound " << report.bound << " actual " << report.actual
                 << (report.applicable ? "" : " (not pair-sum-free)") << "\n";
        } else {
            std::vector<std::int64_t> sums = nonempty_subset_sums(rs);
            j["p"] = opt.p;
            j["sums"] = sums;
            j["count"] = sums.size();
            for (std::size_t i = 0; i < sums.size(); ++i) text << (i ? "," : "") << sums[i];
            text << "\n";
        }
    }

    if (opt.format == "json") write_output(j.dump() + "\n", opt.out_path, out);
    else write_output(text.str(), opt.out_path, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"restricted sumset toolkit"};
    app.require_subcommand(1);

    SumsetOptions sum_opt;
    CLI::App* sum_cmd = app.add_subcommand("sumset", "compute a sumset and its bound report");
    sum_cmd->add_option("--set", sum_opt.set_literal, "comma-separated integers");
    sum_cmd->add_option("--families", sum_opt.families_literal,
                        "semicolon-separated sets, one per summand");
    sum_cmd->add_option("--n", sum_opt.n, "number of summands");
    sum_cmd->add_option("--mode", sum_opt.mode, "squares | distinct | poly");
    sum_cmd->add_option("--poly", sum_opt.poly_literal,
                        "polynomial coefficients, constant first, monic");
    sum_cmd->add_option("--format", sum_opt.format, "json | csv | text");
    sum_cmd->add_option("--out", sum_opt.out_path, "write output to a file");

    ClassifyOptions cls_opt;
    CLI::App* cls_cmd = app.add_subcommand("classify", "extremal-structure classification");
    cls_cmd->add_option("--set", cls_opt.set_literal, "comma-separated integers")->required();
    cls_cmd->add_option("--n", cls_opt.n, "number of summands")->required();
    cls_cmd->add_option("--mode", cls_opt.mode, "squares | distinct");
    cls_cmd->add_option("--format", cls_opt.format, "json | csv | text");
    cls_cmd->add_option("--out", cls_opt.out_path, "write output to a file");

    CampaignOptions ver_opt;
    CLI::App* ver_cmd = app.add_subcommand("verify", "exhaustive theorem verification sweep");
    ver_cmd->add_option("--theorem", ver_opt.theorem, "campaign id");
    ver_cmd->add_option("--spec", ver_opt.spec_path, "campaign file (JSON)");
    ver_cmd->add_option("--n", ver_opt.n_lo, "n (lower end)");
    ver_cmd->add_option("--n-hi", ver_opt.n_hi, "n (upper end)");
    ver_cmd->add_option("--k", ver_opt.k_lo, "k or prime range lower end");
    ver_cmd->add_option("--k-hi", ver_opt.k_hi, "k or prime range upper end");
    ver_cmd->add_option("--max-abs", ver_opt.max_abs, "element magnitude bound M");
    ver_cmd->add_option("--workers", ver_opt.workers, "worker count");
    ver_cmd->add_option("--budget", ver_opt.budget, "enumeration budget");
    ver_cmd->add_option("--format", ver_opt.format, "json | csv | text");
    ver_cmd->add_option("--out", ver_opt.out_path, "report file path");
    ver_cmd->add_flag("--no-timing", ver_opt.no_timing, "zero the elapsed_ms field");

    CampaignOptions srch_opt;
    CLI::App* srch_cmd =
        app.add_subcommand("search", "survey sweep: record bound-attaining sets");
    srch_cmd->add_option("--theorem", srch_opt.theorem, "campaign id");
    srch_cmd->add_option("--spec", srch_opt.spec_path, "campaign file (JSON)");
    srch_cmd->add_option("--n", srch_opt.n_lo, "n (lower end)");
    srch_cmd->add_option("--n-hi", srch_opt.n_hi, "n (upper end)");
    srch_cmd->add_option("--k", srch_opt.k_lo, "k or prime range lower end");
    srch_cmd->add_option("--k-hi", srch_opt.k_hi, "k or prime range upper end");
    srch_cmd->add_option("--max-abs", srch_opt.max_abs, "element magnitude bound M");
    srch_cmd->add_option("--workers", srch_opt.workers, "worker count");
    srch_cmd->add_option("--budget", srch_opt.budget, "enumeration budget");
    srch_cmd->add_option("--format", srch_opt.format, "json | csv | text");
    srch_cmd->add_option("--out", srch_opt.out_path, "report file path");
    srch_cmd->add_flag("--no-timing", srch_opt.no_timing, "zero the elapsed_ms field");

    ZpzOptions zpz_opt;
    CLI::App* zpz_cmd = app.add_subcommand("zpz", "Z/pZ subset-sum checks");
    zpz_cmd->add_option("--p", zpz_opt.p, "prime modulus")->required();
    zpz_cmd->add_option("--set", zpz_opt.set_literal, "comma-separated residues");
    zpz_cmd->add_flag("--selfridge", zpz_opt.selfridge, "largest zero-sum-free size");
    zpz_cmd->add_flag("--balandraud", zpz_opt.balandraud, "subset-sum lower bound report");
    zpz_cmd->add_flag("--sums", zpz_opt.sums, "nonempty subset sums");
    zpz_cmd->add_flag("--verify", zpz_opt.verify, "exhaustive cross-check (p <= 31)");
    zpz_cmd->add_option("--format", zpz_opt.format, "json | text");
    zpz_cmd->add_option("--out", zpz_opt.out_path, "write output to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (sum_cmd->parsed()) return cmd_sumset(sum_opt, out);
        if (cls_cmd->parsed()) return cmd_classify(cls_opt, out);
        if (ver_cmd->parsed()) return cmd_campaign(ver_opt, false, out);
        if (srch_cmd->parsed()) return cmd_campaign(srch_opt, true, out);
        if (zpz_cmd->parsed()) return cmd_zpz(zpz_opt, out);
    } catch (const theorem_violation& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 1;
}

} // namespace sumsets
