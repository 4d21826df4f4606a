#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "coxwitness/conjecture.hpp"
#include "coxwitness/context.hpp"
#include "coxwitness/lemmas.hpp"
#include "coxwitness/report.hpp"
#include "coxwitness/type_a.hpp"

#ifndef COXWITNESS_VERSION
#define COXWITNESS_VERSION "0.0.0"
#endif

namespace coxwitness::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};


/// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                width.resize(std::max(width.size(), r.size()));
                width[i] = std::max(width[i], display_width(r[i]));
            }
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::string line;
            for (std::size_t i = 0; i < rows_[k].size(); ++i) {
                line += rows_[k][i];
                if (i + 1 < rows_[k].size())
                    line += std::string(width[i] - display_width(rows_[k][i]) + 2, ' ');
            }
            os << line << '\n';
            if (k == 0) {
                std::size_t total = 0;
                for (std::size_t i = 0; i < width.size(); ++i)
                    total += width[i] + (i + 1 < width.size() ? 2 : 0);
                os << std::string(total, '-') << '\n';
            }
        }
    }

private:
    // UTF-8 code points, close enough for ∅ and friends.
    static std::size_t display_width(const std::string& s)
    {
        std::size_t n = 0;
        for (unsigned char ch : s)
            if ((ch & 0xC0) != 0x80)
                ++n;
        return n;
    }

    std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
        out += (i ? sep : "") + items[i];
    return out;
}

CoxeterGroup build_group(const std::string& text)
{
    try {
        return CoxeterGroup::build(text);
    } catch (const std::exception& e) {
        throw UsageError("invalid group '" + text + "': " + e.what());
    }
}

Sigma load_sigma(const Options& o)
{
    if (o.sigma_path.empty())
        return {};
    std::ifstream in(o.sigma_path);
    if (!in)
        throw UsageError("cannot read sigma file " + o.sigma_path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Sigma::from_json_text(buf.str());
    } catch (const std::exception& e) {
        throw UsageError("invalid sigma file " + o.sigma_path + ": " + e.what());
    }
}

/// "1,3" → {s1, s3}; an empty string is the empty set.
Subset parse_parabolic(const std::string& text, int rank)
{
    Subset out = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || k < 1 || k > rank)
            throw UsageError("--parabolic expects generator indices 1.." + std::to_string(rank) + ", got '" + item + "'");
        out |= Subset{1} << (k - 1);
    }
    return out;
}

std::string subset_name(const CoxeterGroup& g, Subset s)
{
    if (s == 0)
        return "∅";
    if (s == g.all_generators())
        return "S";
    return subset_label(s);
}


Outcome run_shapes(const Options& o)
{
    auto g = build_group(o.group);
    Arrangement arr(g);
    Outcome out;
    out.command = "shapes";
    out.group = g.label();
    Json list = Json::array();
    Table t({"shape", "codim", "|sh^-1|", "S_lambda", "classes"});
    for (const auto& sh : arr.shapes()) {
        std::vector<std::string> subsets;
        for (Subset i : sh.s_lambda)
            subsets.push_back(subset_label(i));
        std::vector<std::string> reps;
        for (int c : sh.classes)
            reps.push_back(g.word_string(g.class_rep(c)));
        list.push_back(Json{{"id", sh.id},
                            {"codim", sh.codim},
                            {"orbit_size", sh.preimage_size},
                            {"S_lambda", sh.s_lambda},
                            {"S_lambda_labels", subsets},
                            {"canonical", subset_label(sh.canonical)},
                            {"class_reps", reps}});
        t.row({std::to_string(sh.id), std::to_string(sh.codim), std::to_string(sh.preimage_size), join(subsets, " "),
               join(reps)});
    }
    out.result = Json{{"order", g.size()}, {"shapes", list}, {"count", arr.shapes().size()}};
    std::ostringstream os;
    os << g.label() << ": |W| = " << g.size() << ", " << arr.shapes().size() << " shapes\n\n";
    t.print(os);
    out.text = os.str();
    return out;
}

Outcome run_idempotents(const Options& o)
{
    auto g = build_group(o.group);
    DescentAlgebra da(g);
    auto sol = da.solve(load_sigma(o));
    Outcome out;
    out.command = "idempotents";
    out.group = g.label();
    std::ostringstream os;
    os << g.label() << ": e_K = sum_J n_JK x_J\n\n";
    Json list = Json::array();
    for (Subset k : da.subsets()) {
        Json coeffs = Json::object();
        std::vector<std::string> parts;
        for (Subset j : da.subsets()) {
            const Rational& v = sol.n[k][j];
            if (v.is_zero())
                continue;
            coeffs[subset_name(g, j)] = v.to_string();
            parts.push_back("x_" + subset_name(g, j) + ": " + v.to_string());
        }
        list.push_back(Json{{"K", subset_name(g, k)}, {"n", coeffs}});
        os << "e_" << subset_name(g, k) << " = {" << join(parts) << "}\n";
    }
    Json shapes = Json::array();
    os << '\n';
    Table t({"shape", "S_lambda", "sigma(lambda)"});
    for (std::size_t l = 0; l < da.shape_classes().size(); ++l) {
        std::vector<std::string> members;
        for (Subset i : da.shape_classes()[l])
            members.push_back(subset_name(g, i));
        auto s = da.sigma_of_class(sol.sigma, static_cast<int>(l));
        shapes.push_back(Json{{"S_lambda", members}, {"sigma", s.to_string()}});
        t.row({std::to_string(l), join(members, " "), s.to_string()});
    }
    t.print(os);
    out.result = Json{{"idempotents", list}, {"shape_classes", shapes}};
    out.text = os.str();
    return out;
}

Outcome run_os(const Options& o)
{
    auto g = build_group(o.group);
    Arrangement arr(g);
    OrlikSolomon os_alg(arr);
    Outcome out;
    out.command = "os";
    out.group = g.label();
    auto dims = os_alg.degree_dims();
    Json shape_list = Json::array();
    Table t({"shape", "codim", "dim A_lambda"});
    for (const auto& sh : arr.shapes()) {
        auto d = os_alg.shape_basis(sh.id).size();
        shape_list.push_back(Json{{"id", sh.id}, {"dim", d}, {"char", to_json(os_alg.shape_character(sh.id))}});
        t.row({std::to_string(sh.id), std::to_string(sh.codim), std::to_string(d)});
    }
    out.result = Json{{"hyperplanes", os_alg.num_hyperplanes()},
                      {"degrees", dims},
                      {"shapes", shape_list},
                      {"dim", os_alg.basis().size()}};
    std::ostringstream os;
    std::vector<std::string> ds;
    for (int d : dims)
        ds.push_back(std::to_string(d));
    os << g.label() << ": " << os_alg.num_hyperplanes() << " hyperplanes, dim A = " << os_alg.basis().size() << "\n";
    os << "dim A^p: " << join(ds) << "\n\n";
    t.print(os);
    out.text = os.str();
    return out;
}

Outcome run_characters(const Options& o)
{
    auto g = build_group(o.group);
    GroupContext ctx(g, load_sigma(o));
    Outcome out;
    out.command = "characters";
    out.group = g.label();
    std::vector<std::string> header{"", "shape"};
    Json reps = Json::array();
    for (int c = 0; c < g.num_classes(); ++c) {
        header.push_back(g.word_string(g.class_rep(c)));
        reps.push_back(g.word_string(g.class_rep(c)));
    }
    Table t(header);
    Json list = Json::array();
    for (const auto& sh : ctx.arrangement().shapes()) {
        for (const auto& [name, f] : {std::pair{"E", &ctx.char_e()[sh.id]}, std::pair{"A", &ctx.char_a()[sh.id]}}) {
            std::vector<std::string> row{name, std::to_string(sh.id)};
            for (const auto& v : f->values())
                row.push_back(v.to_string());
            t.row(row);
        }
        list.push_back(Json{{"shape", sh.id},
                            {"char_E", to_json(ctx.char_e()[sh.id])},
                            {"char_A", to_json(ctx.char_a()[sh.id])}});
    }
    out.result = Json{{"class_reps", reps}, {"shapes", list}};
    std::ostringstream os;
    os << g.label() << ": characters of E_lambda and A_lambda by class representative\n\n";
    t.print(os);
    out.text = os.str();
    return out;
}

Outcome from_report(const std::string& command, const VerificationReport& rep)
{
    Outcome out;
    out.command = command;
    out.group = rep.group;
    out.result = rep.to_json();
    out.verification = true;
    out.verified = rep.passed();
    if (const Check* f = rep.checks.first_failure())
        out.failure = f->name + (f->detail.empty() ? "" : " [" + f->detail + "]");
    std::ostringstream os;
    os << command << " " << rep.group << ": " << rep.checks.checks().size() << " checks\n\n";
    for (const auto& c : rep.checks.checks())
        os << (c.passed ? "  ok    " : "  FAIL  ") << c.name << (c.passed || c.detail.empty() ? "" : "  [" + c.detail + "]")
           << '\n';
    out.text = os.str();
    return out;
}

Outcome run_conjecture(const Options& o)
{
    auto g = build_group(o.group);
    GroupContext ctx(g, load_sigma(o));
    auto rep = verify_conjecture(ctx, o.first);
    Outcome out;
    out.command = "verify conjecture";
    out.group = g.label();
    out.result = Json{{"shapes", rep.to_json(g)}, {"first_only", o.first}};
    out.verification = true;
    out.verified = rep.verified();
    Table t({"shape", "classes", "solutions", "status"});
    for (const auto& s : rep.shapes) {
        std::vector<std::string> reps;
        for (int c : s.reps)
            reps.push_back(g.word_string(c));
        t.row({std::to_string(s.shape), join(reps), std::to_string(s.solutions.size()),
               s.verified() ? "verified" : "failed"});
        if (!s.verified() && out.failure.empty())
            out.failure = "shape " + std::to_string(s.shape) +
                          ": no choice of phi_c gives char E = sum Ind phi_c and char A = sum Ind(eps alpha_c phi_c)";
    }
    std::ostringstream os;
    os << "verify conjecture " << g.label() << ": " << rep.shapes.size() << " shapes\n\n";
    t.print(os);
    out.text = os.str();
    return out;
}

Outcome run_section(const Options& o, int which)
{
    if (o.n < 2 || o.n > 6)
        throw UsageError("n must be between 2 and 6");
    return which == 5 ? from_report("verify section5", verify_section5(o.n))
                      : from_report("verify section6", verify_section6(o.n));
}

Outcome run_relative(const Options& o)
{
    auto g = build_group(o.group);
    std::int64_t parabolic = -1;
    if (o.has_parabolic) {
        parabolic = parse_parabolic(o.parabolic, g.rank());
        try {
            relative_setup(g, static_cast<Subset>(parabolic));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--parabolic: ") + e.what());
        }
    }
    GroupContext ctx(g);
    return from_report("verify rel", verify_relative(ctx, parabolic));
}

Outcome run_lemmas(const Options& o)
{
    auto g = build_group(o.group);
    if (o.samples < 1)
        throw UsageError("--samples must be positive");
    GroupContext ctx(g, load_sigma(o));
    LemmaOptions opts;
    opts.seed = o.seed;
    opts.samples = o.samples;
    return from_report("verify lemmas", verify_lemmas(ctx, opts));
}

std::string status_of(const Outcome& out)
{
    if (!out.verification)
        return "ok";
    return out.verified ? "verified" : "failed";
}

}  // namespace

std::string render(const Outcome& out, const Options& o)
{
    if (o.json) {
        Json j{{"schema", 1},
               {"tool", "coxwitness"},
               {"version", COXWITNESS_VERSION},
               {"command", out.command},
               {"group", out.group},
               {"status", status_of(out)},
               {"result", out.result}};
        if (!out.failure.empty())
            j["failure"] = out.failure;
        return j.dump(2) + "\n";
    }
    return out.text + "\nstatus: " + status_of(out) + "\n";
}

int finish(const Outcome& outcome, const Options& o, std::ostream& out, std::ostream& err)
{
    std::string body = render(outcome, o);
    if (o.out_path.empty()) {
        out << body;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) {
            err << "coxwitness: cannot write " << o.out_path << '\n';
            return kExitUsage;
        }
        f << body;
    }
    if (!outcome.verified) {
        err << "coxwitness: failing identity: " << outcome.failure << '\n';
        return kExitFailed;
    }
    return kExitOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact descent-algebra and Orlik-Solomon computations for finite Coxeter groups"};
    app.set_version_flag("--version", COXWITNESS_VERSION);
    app.require_subcommand(1);
    Options o;
    std::function<Outcome()> action;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "Emit the JSON report");
        cmd->add_option("--out", o.out_path, "Write the report to this file");
    };
    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("group", o.group, "Coxeter diagram, e.g. A3, B2, I2(5), A2xA1")->required();
    };
    auto add_sigma = [&](CLI::App* cmd) {
        cmd->add_option("--sigma", o.sigma_path, "JSON weight function {\"default\": ..., \"overrides\": {...}}");
    };

    auto* shapes = app.add_subcommand("shapes", "List the shapes (W-orbits in the intersection lattice)");
    add_group(shapes);
    add_common(shapes);
    shapes->callback([&] { action = [&] { return run_shapes(o); }; });

    auto* idem = app.add_subcommand("idempotents", "Coefficients of the quasi-idempotents e_K in the x_J basis");
    add_group(idem);
    add_sigma(idem);
    add_common(idem);
    idem->callback([&] { action = [&] { return run_idempotents(o); }; });

    auto* os = app.add_subcommand("os", "Graded and shape dimensions of the Orlik-Solomon algebra");
    add_group(os);
    add_common(os);
    os->callback([&] { action = [&] { return run_os(o); }; });

    auto* chars = app.add_subcommand("characters", "Characters of E_lambda and A_lambda");
    add_group(chars);
    add_sigma(chars);
    add_common(chars);
    chars->callback([&] { action = [&] { return run_characters(o); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);

    auto* conj = verify->add_subcommand("conjecture", "Search for phi_c realizing both character identities per shape");
    add_group(conj);
    add_sigma(conj);
    add_common(conj);
    conj->add_flag("--first", o.first, "Stop at the first solution per shape");
    conj->callback([&] { action = [&] { return run_conjecture(o); }; });

    auto* s5 = verify->add_subcommand("section5", "The n-cycle construction in S_n");
    s5->add_option("n", o.n, "n (2..6)")->required();
    add_common(s5);
    s5->callback([&] { action = [&] { return run_section(o, 5); }; });

    auto* s6 = verify->add_subcommand("section6", "Every partition of n in S_n");
    s6->add_option("n", o.n, "n (2..6)")->required();
    add_common(s6);
    s6->callback([&] { action = [&] { return run_section(o, 6); }; });

    auto* rel = verify->add_subcommand("rel", "Relative construction for parabolics of type A");
    add_group(rel);
    rel->add_option("--parabolic", o.parabolic, "Generators of L, 1-based and comma separated (default: one L per shape)");
    add_common(rel);
    rel->callback([&] {
        o.has_parabolic = rel->count("--parabolic") > 0;
        action = [&] { return run_relative(o); };
    });

    auto* lem = verify->add_subcommand("lemmas", "Descent-algebra and Orlik-Solomon identities, exact and sampled");
    add_group(lem);
    add_sigma(lem);
    add_common(lem);
    lem->add_option("--seed", o.seed, "Seed for the sampled properties");
    lem->add_option("--samples", o.samples, "Samples per sampled property");
    lem->callback([&] { action = [&] { return run_lemmas(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome = action();
        std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        err << std::fixed << std::setprecision(2) << "coxwitness: " << outcome.command << " " << outcome.group << " "
            << status_of(outcome) << " in " << took.count() << " s\n";
        return finish(outcome, o, out, err);
    } catch (const UsageError& e) {
        err << "coxwitness: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "coxwitness: error: " << e.what() << '\n';
        return kExitFailed;
    }
}

}  // namespace coxwitness::cli

