// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "cli.hpp"
#include "coxwitness/conjecture.hpp"
#include "coxwitness/lemmas.hpp"
#include "coxwitness/type_a.hpp"

using namespace coxwitness;

namespace {

// Samples per sampled property per group; 17 groups × 6-7 properties × 150 > 10^4.
constexpr int kSamples = 150;
constexpr int kMinTotalSamples = 10000;
// Per-group budget for groups no larger than H3 (|W| = 120).
constexpr double kStructuralSecondsSmall = 10.0;

const std::vector<std::string> kSupported = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4",
                                             "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3", "A2xA1",
                                             "A1xA1"};

struct GroupRun {
    std::unique_ptr<CoxeterGroup> group;
    std::unique_ptr<GroupContext> ctx;
    VerificationReport lemmas;
    double seconds = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool name_has(const Check& c, std::initializer_list<const char*> keys)
{
    for (const char* k : keys)
        if (c.name.find(k) != std::string::npos)
            return true;
    return false;
}

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}
    void require(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failure_.empty())
            failure_ = what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    bool passed() const { return failure_.empty(); }
    void print(int index) const
    {
        std::cout << "criterion " << index << " " << (passed() ? "PASS" : "FAIL") << "  " << title_ << "  ("
                  << checks_ << " checks" << (notes_.empty() ? "" : "; " + notes_) << ")";
        if (!passed())
            std::cout << "  first failure: " << failure_;
        std::cout << std::endl;
    }

private:
    std::string title_;
    std::string failure_;
    std::string notes_;
    int checks_ = 0;
};

std::string run_cli_json(const std::vector<std::string>& args)
{
    std::vector<std::string> storage{"coxwitness"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : storage)
        argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

}  // namespace

int main()
{
    std::cout << std::fixed << std::setprecision(2);
    std::map<std::string, GroupRun> runs;
    for (const auto& name : kSupported) {
        auto start = std::chrono::steady_clock::now();
        GroupRun r;
        r.group = std::make_unique<CoxeterGroup>(CoxeterGroup::build(name));
        r.ctx = std::make_unique<GroupContext>(*r.group);
        LemmaOptions opts;
        opts.samples = kSamples;
        opts.random_sigmas = 3;
        r.lemmas = verify_lemmas(*r.ctx, opts);
        r.seconds = seconds_since(start);
        runs.emplace(name, std::move(r));
    }

    std::vector<Criterion> results;

    {
        Criterion c("structural exactness: sum e_lambda = 1, orthogonality, quasi-idempotency (sigma = 1 and 3 random), "
                    "w0 expansion, descent product = convolution");
        double slowest_small = 0;
        for (const auto& [name, r] : runs) {
            int structural = 0;
            for (const auto& ch : r.lemmas.checks.checks())
                if (name_has(ch, {"sum of e_lambda = 1", "e_lambda e_mu = delta", "e_I e_J = sigma(lambda)^-1",
                                  "e_lambda e_I = e_I", "w0 = sum (-1)^|L| e_L", "descent product"})) {
                    ++structural;
                    c.require(ch.passed, name + ": " + ch.name);
                }
            // 4 sigmas × 4 identities + w0 + convolution
            c.require(structural == 18, name + ": expected 18 structural checks, found " + std::to_string(structural));
            if (r.group->size() <= 120)
                slowest_small = std::max(slowest_small, r.seconds);
        }
        c.require(slowest_small < kStructuralSecondsSmall, "structural suite exceeded the time budget");
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << runs.size() << " groups, slowest up to |W| = 120: " << slowest_small
           << " s";
        c.note(os.str());
        results.push_back(c);
    }

    {
        Criterion c("dimensions: dim E_lambda = dim A_lambda = |sh^-1(lambda)|, dim A = |W|; A2 graded (1,3,2)");
        for (const auto& [name, r] : runs) {
            const auto& arr = r.ctx->arrangement();
            for (const auto& sh : arr.shapes()) {
                CycloNumber p(sh.preimage_size);
                c.require(r.ctx->char_e()[sh.id].degree() == p, name + ": dim E shape " + std::to_string(sh.id));
                c.require(r.ctx->char_a()[sh.id].degree() == p, name + ": dim A shape " + std::to_string(sh.id));
            }
            c.require(static_cast<int>(r.ctx->os().basis().size()) == r.group->size(), name + ": dim A = |W|");
        }
        const auto& a2 = runs.at("A2");
        c.require(a2.ctx->os().degree_dims() == std::vector<int>{1, 3, 2}, "A2 graded dims");
        std::vector<int> shape_dims;
        for (const auto& sh : a2.ctx->arrangement().shapes())
            shape_dims.push_back(static_cast<int>(a2.ctx->os().shape_basis(sh.id).size()));
        std::sort(shape_dims.begin(), shape_dims.end());
        c.require(shape_dims == std::vector<int>{1, 2, 3}, "A2 shape dims");
        results.push_back(c);
    }

    {
        Criterion c("character identities (a) and (b) have a phi_c solution for every shape");
        std::vector<std::string> groups = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "D4", "I2(4)",
                                           "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3"};
        double slowest = 0;
        for (const auto& name : groups) {
            auto start = std::chrono::steady_clock::now();
            auto rep = verify_conjecture(*runs.at(name).ctx);
            slowest = std::max(slowest, seconds_since(start));
            for (const auto& s : rep.shapes)
                c.require(s.verified(), name + ": shape " + std::to_string(s.shape));
        }
        // I2(3) is A2 under another name; I2(2) is A1xA1.
        for (const char* name : {"I2(3)", "A1xA1"}) {
            auto g = CoxeterGroup::build(name);
            c.require(verify_conjecture(g).verified(), name);
        }
        std::ostringstream os;
        os << std::fixed << std::setprecision(2) << groups.size() + 2 << " groups, slowest search " << slowest << " s";
        c.note(os.str());
        results.push_back(c);
    }

    {
        Criterion c("n-cycle in S_n, n = 3..6: char E_n = Ind phi, char A_n = eps Ind phi; n = 3 gives (2, 0, -1)");
        for (int n = 3; n <= 6; ++n) {
            auto rep = verify_section5(n);
            const Check* f = rep.checks.first_failure();
            c.require(rep.passed(), "n = " + std::to_string(n) + ": " + (f ? f->name : ""));
            if (n == 3) {
                auto g = CoxeterGroup::build("A2");
                ClassFunction expect(g);
                expect.at_class(g.class_of(0)) = CycloNumber(2);
                expect.at_class(g.class_of(g.generator(0))) = CycloNumber(0);
                expect.at_class(g.class_of(g.mul(g.generator(0), g.generator(1)))) = CycloNumber(-1);
                c.require(rep.data["char_E"] == to_json(expect), "n = 3: char E_3 = (2, 0, -1)");
                c.require(rep.data["char_A"] == to_json(expect), "n = 3: char A_3 = (2, 0, -1)");
            }
        }
        results.push_back(c);
    }

    {
        Criterion c("every partition of n <= 6: the constructed phi_lambda gives both character identities");
        int partitions_checked = 0;
        for (int n = 2; n <= 6; ++n) {
            auto rep = verify_section6(n);
            const Check* f = rep.checks.first_failure();
            c.require(rep.passed(), "n = " + std::to_string(n) + ": " + (f ? f->name + " " + f->detail : ""));
            partitions_checked += static_cast<int>(rep.data["partitions"].size());
        }
        c.require(partitions_checked == 2 + 3 + 5 + 7 + 11, "partition count");
        c.note(std::to_string(partitions_checked) + " partitions");
        results.push_back(c);
    }

    {
        Criterion c("relative construction for each type-A parabolic up to conjugacy: scalar equations and both "
                    "character identities");
        int parabolics = 0;
        for (const char* name : {"B2", "B3", "B4", "D4", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3"}) {
            const auto& ctx = *runs.at(name).ctx;
            auto rep = verify_relative(ctx);
            const Check* f = rep.checks.first_failure();
            c.require(rep.passed(), std::string(name) + ": " + (f ? f->name + " " + f->detail : ""));
            auto expected = type_a_parabolics(ctx).size();
            c.require(rep.data["parabolics"].size() == expected, std::string(name) + ": parabolic count");
            parabolics += static_cast<int>(expected);
        }
        {
            auto g = CoxeterGroup::build("I2(3)");
            GroupContext ctx(g);
            c.require(verify_relative(ctx).passed(), "I2(3)");
            parabolics += static_cast<int>(type_a_parabolics(ctx).size());
        }
        c.note(std::to_string(parabolics) + " parabolics");
        results.push_back(c);
    }

    {
        Criterion c("sampled properties: translation, restriction, N-equivariance, reducible products, Frobenius "
                    "reciprocity, W-action on A, alpha_X multiplicativity; zero failures");
        int total = 0;
        std::map<std::string, int> per_property;
        for (const auto& [name, r] : runs) {
            for (const auto& p : r.lemmas.data["properties"]) {
                c.require(p["failures"].get<int>() == 0, name + ": " + p["name"].get<std::string>());
                per_property[p["name"].get<std::string>()] += p["samples"].get<int>();
                total += p["samples"].get<int>();
            }
            for (const auto& ch : r.lemmas.checks.checks())
                c.require(ch.passed, name + ": " + ch.name + " " + ch.detail);
        }
        c.require(per_property.size() == 7, "all seven properties sampled");
        c.require(total >= kMinTotalSamples, "at least 10^4 samples");
        c.note(std::to_string(total) + " samples");
        results.push_back(c);
    }

    {
        Criterion c("determinism: verify conjecture B3 --json twice gives identical bytes");
        auto a = run_cli_json({"verify", "conjecture", "B3", "--json"});
        auto b = run_cli_json({"verify", "conjecture", "B3", "--json"});
        c.require(!a.empty() && a == b, "reports differ");
        auto la = verify_lemmas(*runs.at("B3").ctx, {9, 40, 2}).to_json().dump();
        auto lb = verify_lemmas(*runs.at("B3").ctx, {9, 40, 2}).to_json().dump();
        c.require(la == lb, "lemma reports differ for a fixed seed");
        c.note(std::to_string(a.size()) + " bytes");
        results.push_back(c);
    }

    bool all = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        results[i].print(static_cast<int>(i + 1));
        all = all && results[i].passed();
    }
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? 0 : 1;
}
