#include "coxwitness/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "coxwitness/parallel.hpp"

namespace coxwitness {

Sigma random_sigma(const CoxeterGroup& g, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(1, 9);
    Sigma s;
    for (Subset i = 0; i <= g.all_generators(); ++i) {
        int p = d(rng);
        int q = d(rng);
        s.overrides[i] = Rational(p, q);
    }
    return s;
}

namespace {

int generator_index(const CoxeterGroup& g, int w)
{
    for (int s = 0; s < g.rank(); ++s)
        if (g.generator(s) == w)
            return s;
    return -1;
}

/// J^n = {n⁻¹ s n : s ∈ J} for n normalizing the generators in J.
Subset conjugate_subset(const CoxeterGroup& g, int n, Subset j)
{
    Subset out = 0;
    for (int s = 0; s < g.rank(); ++s)
        if (j >> s & 1) {
            int t = generator_index(g, g.conjugate(g.inv(n), g.generator(s)));
            if (t < 0)
                return ~Subset{0};
            out |= Subset{1} << t;
        }
    return out;
}

/// Tally for one sampled property.
struct Property {
    explicit Property(std::string n) : name(std::move(n)) {}

    std::string name;
    int samples = 0;
    int failures = 0;
    std::string witness;

    void record(bool ok, const std::function<std::string()>& describe)
    {
        ++samples;
        if (!ok && failures++ == 0)
            witness = describe();
    }
};

/// Quasi-idempotents for one σ, in Σ(W) and as group algebra elements.
struct SigmaData {
    Sigma sigma;
    BbhtSolution sol;
    std::vector<GroupAlgebraElement> e;  // by subset
    std::vector<GroupAlgebraElement> e_lambda;
};

/// e_J^{σ_L} in Σ(W_L), cached per (σ, L).
struct Restricted {
    std::unique_ptr<DescentAlgebra> da;
    Sigma sigma_l;
    BbhtSolution sol;
    std::map<Subset, GroupAlgebraElement> e;
};

class LemmaRunner {
public:
    LemmaRunner(const GroupContext& ctx, const LemmaOptions& opts)
        : ctx_(ctx), g_(ctx.group()), da_(ctx.descent()), opts_(opts), rng_(opts.seed)
    {
    }

    VerificationReport run();

private:
    SigmaData make_sigma_data(const Sigma& s) const;
    Restricted& restricted(std::size_t sigma_index, Subset l);
    const std::vector<int>& normalizer(Subset l);
    const std::vector<int>& complement(Subset l);
    GroupAlgebraElement random_in_parabolic(Subset l);
    Subset random_subset_of(Subset l);
    template <class T>
    const T& pick(const std::vector<T>& v)
    {
        std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
        return v[d(rng_)];
    }

    void exact_checks(CheckList& out);
    void induction_checks(CheckList& out);
    Property shift_lemma();
    Property restrict_lemma();
    Property equivariance();
    Property reducible_products();
    Property frobenius();
    Property os_automorphism();
    Property alpha_multiplicative();

    const GroupContext& ctx_;
    const CoxeterGroup& g_;
    const DescentAlgebra& da_;
    LemmaOptions opts_;
    std::mt19937_64 rng_;
    std::vector<SigmaData> sigmas_;
    std::map<std::pair<std::size_t, Subset>, Restricted> restricted_;
    std::map<Subset, std::vector<int>> normalizers_;
    std::map<Subset, std::vector<int>> complements_;
};

SigmaData LemmaRunner::make_sigma_data(const Sigma& s) const
{
    SigmaData d;
    d.sigma = s;
    d.sol = da_.solve(s);
    for (Subset i = 0; i <= g_.all_generators(); ++i)
        d.e.push_back(da_.to_group_algebra(d.sol.e[i]));
    for (std::size_t l = 0; l < da_.shape_classes().size(); ++l)
        d.e_lambda.push_back(da_.to_group_algebra(da_.e_lambda(d.sol, static_cast<int>(l))));
    return d;
}

Restricted& LemmaRunner::restricted(std::size_t sigma_index, Subset l)
{
    auto key = std::make_pair(sigma_index, l);
    auto it = restricted_.find(key);
    if (it != restricted_.end())
        return it->second;
    Restricted r;
    r.da = std::make_unique<DescentAlgebra>(g_, l);
    r.sigma_l = da_.restrict_sigma(l, sigmas_[sigma_index].sigma);
    r.sol = r.da->solve(r.sigma_l);
    for (Subset j : r.da->subsets())
        r.e.emplace(j, r.da->to_group_algebra(r.sol.e[j]));
    return restricted_.emplace(key, std::move(r)).first->second;
}

const std::vector<int>& LemmaRunner::normalizer(Subset l)
{
    auto it = normalizers_.find(l);
    if (it == normalizers_.end())
        it = normalizers_.emplace(l, g_.normalizer(l)).first;
    return it->second;
}

const std::vector<int>& LemmaRunner::complement(Subset l)
{
    auto it = complements_.find(l);
    if (it == complements_.end())
        it = complements_.emplace(l, g_.parabolic_complement(l)).first;
    return it->second;
}

Subset LemmaRunner::random_subset_of(Subset l)
{
    Subset out = 0;
    for (int s = 0; s < g_.rank(); ++s)
        if ((l >> s & 1) && (rng_() & 1))
            out |= Subset{1} << s;
    return out;
}

GroupAlgebraElement LemmaRunner::random_in_parabolic(Subset l)
{
    auto elems = g_.parabolic(l);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto a = GroupAlgebraElement::zero(g_);
    for (int k = 0; k < 3; ++k)
        a[pick(elems)] += CycloNumber(coef(rng_));
    return a;
}

void LemmaRunner::exact_checks(CheckList& out)
{
    const auto& shapes = da_.shape_classes();
    const auto one = GroupAlgebraElement::one(g_);
    for (std::size_t q = 0; q < sigmas_.size(); ++q) {
        const auto& sd = sigmas_[q];
        const std::string tag = q == 0 ? "sigma=context: " : "sigma=random" + std::to_string(q) + ": ";
        auto sum = GroupAlgebraElement::zero(g_);
        for (const auto& e : sd.e_lambda)
            sum += e;
        out.add(tag + "sum of e_lambda = 1", sum == one);

        bool orth = true;
        for (std::size_t a = 0; a < shapes.size(); ++a)
            for (std::size_t b = 0; b < shapes.size(); ++b) {
                auto p = da_.product(da_.e_lambda(sd.sol, static_cast<int>(a)), da_.e_lambda(sd.sol, static_cast<int>(b)));
                auto expect = a == b ? da_.e_lambda(sd.sol, static_cast<int>(a)) : da_.zero();
                orth = orth && p == expect;
            }
        out.add(tag + "e_lambda e_mu = delta e_lambda", orth);

        bool quasi = true;
        bool absorb = true;
        for (std::size_t l = 0; l < shapes.size(); ++l) {
            CycloNumber inv_sigma = CycloNumber(da_.sigma_of_class(sd.sigma, static_cast<int>(l))).inverse();
            auto el = da_.e_lambda(sd.sol, static_cast<int>(l));
            for (Subset i : shapes[l]) {
                for (Subset j : shapes[l])
                    quasi = quasi && da_.product(sd.sol.e[i], sd.sol.e[j]) == inv_sigma * sd.sol.e[j];
                absorb = absorb && da_.product(el, sd.sol.e[i]) == sd.sol.e[i] &&
                         da_.product(sd.sol.e[i], el) == inv_sigma * el;
            }
        }
        out.add(tag + "e_I e_J = sigma(lambda)^-1 e_J for I, J in S_lambda", quasi);
        out.add(tag + "e_lambda e_I = e_I and e_I e_lambda = sigma(lambda)^-1 e_lambda", absorb);

        bool tri = true;
        for (Subset j : da_.subsets())
            for (Subset k : da_.subsets()) {
                Rational m = da_.m(sd.sigma, j, k);
                if (!is_subset(j, k))
                    tri = tri && m.is_zero();
                if (j == k)
                    tri = tri && !m.is_zero();
            }
        out.add(tag + "m_JK is triangular with non-zero diagonal", tri);
        out.add(tag + "m_JS = sigma(J)", [&] {
            for (Subset j : da_.subsets())
                if (da_.m(sd.sigma, j, g_.all_generators()) != sd.sigma(j))
                    return false;
            return true;
        }());

        if (q > 0) {
            bool same = true;
            for (std::size_t l = 0; l < shapes.size(); ++l)
                same = same && ideal_character(sd.e_lambda[l]) == ctx_.char_e()[l];
            out.add(tag + "char E_lambda^sigma does not depend on sigma", same);
        }
    }

    // x_I x_J in Σ(W) agrees with convolution in ℚW.
    {
        bool ok = true;
        std::string bad;
        std::vector<GroupAlgebraElement> xs;
        for (Subset i = 0; i <= g_.all_generators(); ++i)
            xs.push_back(da_.x_group(i));
        for (Subset i = 0; i <= g_.all_generators() && ok; ++i)
            for (Subset j = 0; j <= g_.all_generators() && ok; ++j)
                if (!(da_.to_group_algebra(da_.product(da_.x(i), da_.x(j))) == xs[i] * xs[j])) {
                    ok = false;
                    bad = "x" + subset_label(i) + " x" + subset_label(j);
                }
        out.add("descent product = group algebra convolution", ok, bad);
    }

    // w0 expansion and its action (σ ≡ 1).
    {
        auto sol1 = da_.solve(Sigma{});
        const int w0 = g_.longest();
        auto w0e = GroupAlgebraElement::basis(g_, w0);
        auto by_subsets = da_.zero();
        for (Subset l : da_.subsets())
            by_subsets += CycloNumber(popcount(l) % 2 ? -1 : 1) * sol1.e[l];
        auto by_shapes = da_.zero();
        for (std::size_t l = 0; l < shapes.size(); ++l)
            by_shapes += CycloNumber(popcount(shapes[l].front()) % 2 ? -1 : 1) * da_.e_lambda(sol1, static_cast<int>(l));
        out.add("w0 = sum (-1)^|L| e_L", da_.to_group_algebra(by_subsets) == w0e);
        out.add("w0 = sum (-1)^d_lambda e_lambda", da_.to_group_algebra(by_shapes) == w0e);
        bool left = true;
        bool conj = true;
        bool right = true;
        for (Subset j : da_.subsets()) {
            auto ej = da_.to_group_algebra(sol1.e[j]);
            Subset jw = conjugate_subset(g_, w0, j);
            auto ejw = da_.to_group_algebra(sol1.e[jw]);
            CycloNumber s(popcount(j) % 2 ? -1 : 1);
            left = left && ej.element_times(w0) == ej * s;
            conj = conj && ej.conjugated_by(w0) == ejw;
            right = right && ej.times_element(w0) == ejw * s;
        }
        out.add("w0 e_J = (-1)^|J| e_J", left);
        out.add("w0 e_J w0 = e_{J^w0}", conj);
        out.add("e_J w0 = (-1)^|J| e_{J^w0}", right);
    }

    // Dimensions.
    {
        const auto& arr = ctx_.arrangement();
        bool dims = true;
        int total_a = 0;
        for (const auto& sh : arr.shapes()) {
            dims = dims && ctx_.char_e()[sh.id].degree() == CycloNumber(sh.preimage_size) &&
                   ctx_.char_a()[sh.id].degree() == CycloNumber(sh.preimage_size);
            total_a += static_cast<int>(ctx_.os().shape_basis(sh.id).size());
        }
        out.add("dim E_lambda = dim A_lambda = |sh^-1(lambda)|", dims);
        out.add("dim A = |W|", total_a == g_.size());
        if (g_.size() <= 200) {
            bool ranks = true;
            for (const auto& sh : arr.shapes()) {
                std::vector<GroupAlgebraElement> span;
                for (int w = 0; w < g_.size(); ++w)
                    span.push_back(sigmas_[0].e_lambda[sh.id].times_element(w));
                ranks = ranks && static_cast<int>(modular_rank_of(span)) == sh.preimage_size;
            }
            out.add("rank of e_lambda QW = |sh^-1(lambda)|", ranks);
        }
    }
}

void LemmaRunner::induction_checks(CheckList& out)
{
    const auto& arr = ctx_.arrangement();
    bool e_ok = true;
    bool a_ok = true;
    std::string bad_e;
    std::string bad_a;
    for (const auto& sh : arr.shapes()) {
        Subset l = sh.canonical;
        auto& r = restricted(0, l);
        // e_L^{σ_L} squares to σ_L(L)⁻¹ e_L^{σ_L}.
        const auto e = r.e.at(l) * CycloNumber(r.sigma_l(l));
        auto wl = g_.parabolic(l);
        const auto& nrm = normalizer(l);
        const auto& nl = complement(l);
        std::map<int, CycloNumber> trace_e;
        std::map<int, CycloNumber> trace_a;
        const int x = arr.lattice_of_subset(l);
        for (const auto& cls : subgroup_classes(g_, nrm)) {
            int y = cls.front();
            int n = 0;
            for (int cand : nl)
                if (g_.in_parabolic(g_.mul(y, g_.inv(cand)), l)) {
                    n = cand;
                    break;
                }
            int w = g_.mul(y, g_.inv(n));
            CycloNumber te = twisted_parabolic_trace(e, wl, w, n);
            CycloNumber ta = ctx_.os().trace(y, ctx_.os().flat_basis(x));
            for (int z : cls) {
                trace_e[z] = te;
                trace_a[z] = ta;
            }
        }
        auto ind_e = induce(g_, nrm, [&](int z) { return trace_e.at(z); });
        auto ind_a = induce(g_, nrm, [&](int z) { return trace_a.at(z); });
        if (!(ind_e == ctx_.char_e()[sh.id]) && e_ok) {
            e_ok = false;
            bad_e = "shape " + std::to_string(sh.id);
        }
        if (!(ind_a == ctx_.char_a()[sh.id]) && a_ok) {
            a_ok = false;
            bad_a = "shape " + std::to_string(sh.id);
        }
    }
    out.add("char E_lambda = Ind_{N_W(W_L)}^W char(e_L^{sigma_L} QW_L)", e_ok, bad_e);
    out.add("char A_lambda = Ind_{N_W(W_X)}^W char A_X", a_ok, bad_a);
}

Property LemmaRunner::shift_lemma()
{
    Property p{"translation: x_{K^d} = x_K d and e_{L^d} = e_L d"};
    // For each K the d with d⁻¹(Δ_K) ⊆ Δ.
    std::vector<std::vector<int>> admissible(static_cast<std::size_t>(g_.all_generators()) + 1);
    for (Subset k = 0; k <= g_.all_generators(); ++k)
        for (int d = 0; d < g_.size(); ++d)
            if (g_.image_of_simple_subset(g_.inv(d), k) >= 0)
                admissible[k].push_back(d);
    std::uniform_int_distribution<Subset> pick_k(0, g_.all_generators());
    std::uniform_int_distribution<std::size_t> pick_sigma(0, sigmas_.size() - 1);
    for (int t = 0; t < opts_.samples; ++t) {
        Subset k = pick_k(rng_);
        int d = pick(admissible[k]);
        Subset l = random_subset_of(k);
        const auto& sd = sigmas_[pick_sigma(rng_)];
        auto kd = static_cast<Subset>(g_.image_of_simple_subset(g_.inv(d), k));
        auto ld = static_cast<Subset>(g_.image_of_simple_subset(g_.inv(d), l));
        bool ok = da_.x_group(kd) == da_.x_group(k).times_element(d) && sd.e[ld] == sd.e[l].times_element(d);
        p.record(ok, [&] { return "K=" + subset_label(k) + " d=" + g_.word_string(d) + " L=" + subset_label(l); });
    }
    return p;
}

Property LemmaRunner::restrict_lemma()
{
    Property p{"restriction: m^{sigma_L} = m^sigma, x_L e_J^{sigma_L} = e_J^sigma, n^-1 e_J^{sigma_L} n = e_{J^n}^{sigma_L}"};
    std::uniform_int_distribution<Subset> pick_l(0, g_.all_generators());
    std::uniform_int_distribution<std::size_t> pick_sigma(0, sigmas_.size() - 1);
    for (int t = 0; t < opts_.samples; ++t) {
        Subset l = pick_l(rng_);
        std::size_t q = pick_sigma(rng_);
        auto& r = restricted(q, l);
        Subset j = random_subset_of(l);
        Subset i = random_subset_of(j);
        int n = pick(complement(l));
        Subset jn = conjugate_subset(g_, n, j);
        bool ok = r.da->m(r.sigma_l, i, j) == da_.m(sigmas_[q].sigma, i, j);
        ok = ok && da_.x_group(l) * r.e.at(j) == sigmas_[q].e[j];
        ok = ok && is_subset(jn, l) && r.e.at(j).conjugated_by(n) == r.e.at(jn);
        p.record(ok, [&] {
            return "L=" + subset_label(l) + " I=" + subset_label(i) + " J=" + subset_label(j) + " n=" + g_.word_string(n);
        });
    }
    return p;
}

Property LemmaRunner::equivariance()
{
    Property p{"x_L (a . w n) = (x_L a) w n on QW_L"};
    std::uniform_int_distribution<Subset> pick_l(0, g_.all_generators());
    for (int t = 0; t < opts_.samples; ++t) {
        Subset l = pick_l(rng_);
        auto a = random_in_parabolic(l);
        int y = pick(normalizer(l));
        int n = 0;
        for (int cand : complement(l))
            if (g_.in_parabolic(g_.mul(y, g_.inv(cand)), l)) {
                n = cand;
                break;
            }
        int w = g_.mul(y, g_.inv(n));
        auto xl = da_.x_group(l);
        auto moved = a.times_element(w).conjugated_by(n);
        bool ok = g_.in_parabolic(w, l) && xl * moved == (xl * a).times_element(y);
        p.record(ok, [&] { return "L=" + subset_label(l) + " y=" + g_.word_string(y); });
    }
    return p;
}

Property LemmaRunner::reducible_products()
{
    Property p{"reducible W: e_J = e_{J cap S1} e_{J cap S2} for multiplicative sigma"};
    const auto& comps = g_.diagram().components;
    if (comps.size() < 2)
        return p;
    Subset s1 = 0;
    for (int s : comps[0])
        s1 |= Subset{1} << s;
    const Subset s2 = g_.all_generators() & ~s1;
    const DescentAlgebra da1(g_, s1);
    const DescentAlgebra da2(g_, s2);
    std::uniform_int_distribution<int> d(1, 9);
    std::uniform_int_distribution<Subset> pick_j(0, g_.all_generators());
    const int rounds = std::max(1, opts_.samples / 16);
    BbhtSolution sol;
    BbhtSolution sol1;
    BbhtSolution sol2;
    for (int t = 0; t < opts_.samples; ++t) {
        // σ = σ_1 × σ_2, redrawn every `rounds` samples; σ ≡ 1 first.
        if (t % rounds == 0) {
            Sigma sigma;
            Sigma sigma1;
            Sigma sigma2;
            if (t > 0) {
                for (Subset a : da1.subsets())
                    sigma1.overrides[a] = Rational(d(rng_), d(rng_));
                for (Subset a : da2.subsets())
                    sigma2.overrides[a] = Rational(d(rng_), d(rng_));
                for (Subset a = 0; a <= g_.all_generators(); ++a)
                    sigma.overrides[a] = sigma1(a & s1) * sigma2(a & s2);
            }
            sol = da_.solve(sigma);
            sol1 = da1.solve(sigma1);
            sol2 = da2.solve(sigma2);
        }
        Subset j = pick_j(rng_);
        auto lhs = da_.to_group_algebra(sol.e[j]);
        auto rhs = da1.to_group_algebra(sol1.e[j & s1]) * da2.to_group_algebra(sol2.e[j & s2]);
        p.record(lhs == rhs, [&] { return "J=" + subset_label(j); });
    }
    return p;
}

Property LemmaRunner::frobenius()
{
    Property p{"Frobenius reciprocity <Ind phi, chi>_W = <phi, Res chi>_H"};
    std::vector<ClassFunction> pool = {ClassFunction::trivial(g_), ClassFunction::sign(g_)};
    for (const auto& f : ctx_.char_e())
        pool.push_back(f);
    for (const auto& f : ctx_.char_a())
        pool.push_back(f);
    std::map<int, std::pair<std::vector<int>, std::vector<LinearCharacter>>> cache;
    std::uniform_int_distribution<int> pick_class(0, g_.num_classes() - 1);
    for (int t = 0; t < opts_.samples; ++t) {
        int c = pick_class(rng_);
        auto it = cache.find(c);
        if (it == cache.end()) {
            auto z = g_.centralizer(g_.class_rep(c));
            auto chars = linear_characters(g_, z);
            it = cache.emplace(c, std::make_pair(std::move(z), std::move(chars))).first;
        }
        const auto& [z, chars] = it->second;
        const auto& phi = pick(chars);
        const auto& chi = pick(pool);
        auto lhs = induce(g_, phi).inner(chi);
        auto rhs = subgroup_inner(z, [&](int y) { return phi(y); }, [&](int y) { return chi(y); });
        p.record(lhs == rhs, [&] { return "Z(" + g_.word_string(g_.class_rep(c)) + ")"; });
    }
    return p;
}

Property LemmaRunner::os_automorphism()
{
    Property p{"W acts on A by algebra automorphisms preserving the flat grading"};
    const auto& os = ctx_.os();
    const auto& arr = ctx_.arrangement();
    std::uniform_int_distribution<int> elem(0, g_.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_element = [&] {
        OSElement x;
        for (int k = 0; k < 3; ++k)
            x.add(pick(os.basis()), CycloNumber(coef(rng_)));
        return x;
    };
    for (int t = 0; t < opts_.samples; ++t) {
        auto x = random_element();
        auto y = random_element();
        int w = elem(rng_);
        int v = elem(rng_);
        bool ok = os.act(w, os.product(x, y)) == os.product(os.act(w, x), os.act(w, y));
        ok = ok && os.act(g_.mul(w, v), x) == os.act(w, os.act(v, x));
        PositionSet m = pick(os.basis());
        OSElement b;
        b.add(m, CycloNumber(1));
        int wx = arr.find(arr.translate(w, arr.lattice(os.flat_of(m)).reflections));
        for (const auto& [mm, cc] : os.act(w, b).terms)
            ok = ok && os.flat_of(mm) == wx;
        p.record(ok, [&] { return "w=" + g_.word_string(w) + " v=" + g_.word_string(v); });
    }
    return p;
}

Property LemmaRunner::alpha_multiplicative()
{
    Property p{"alpha_X is a character of N_W(W_X), trivial on W_X"};
    const auto& arr = ctx_.arrangement();
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> cache;
    std::uniform_int_distribution<int> pick_x(0, arr.num_lattice() - 1);
    for (int t = 0; t < opts_.samples; ++t) {
        int x = pick_x(rng_);
        auto it = cache.find(x);
        if (it == cache.end())
            it = cache.emplace(x, std::make_pair(arr.setwise_stabilizer(x), arr.pointwise_stabilizer(x))).first;
        const auto& [setwise, pointwise] = it->second;
        int a = pick(setwise);
        int b = pick(setwise);
        int w = pick(pointwise);
        bool ok = arr.alpha(x, g_.mul(a, b)) == arr.alpha(x, a) * arr.alpha(x, b) && arr.alpha(x, w) == CycloNumber(1);
        p.record(ok, [&] { return "a=" + g_.word_string(a) + " b=" + g_.word_string(b); });
    }
    return p;
}

VerificationReport LemmaRunner::run()
{
    VerificationReport rep;
    rep.kind = "lemmas";
    rep.group = g_.label();
    sigmas_.push_back(make_sigma_data(ctx_.sigma()));
    for (int q = 0; q < opts_.random_sigmas; ++q)
        sigmas_.push_back(make_sigma_data(random_sigma(g_, opts_.seed * 1000003 + static_cast<std::uint64_t>(q))));

    exact_checks(rep.checks);
    induction_checks(rep.checks);

    Json props = Json::array();
    int total = 0;
    using Sampler = Property (LemmaRunner::*)();
    for (Sampler fn : {&LemmaRunner::shift_lemma, &LemmaRunner::restrict_lemma, &LemmaRunner::equivariance,
                     &LemmaRunner::reducible_products, &LemmaRunner::frobenius, &LemmaRunner::os_automorphism,
                     &LemmaRunner::alpha_multiplicative}) {
        Property p = (this->*fn)();
        if (p.samples == 0)
            continue;
        total += p.samples;
        rep.checks.add(p.name, p.failures == 0, p.witness);
        props.push_back(Json{{"name", p.name}, {"samples", p.samples}, {"failures", p.failures}});
    }
    rep.data = Json{{"properties", props}, {"samples", total}, {"random_sigmas", opts_.random_sigmas}};
    return rep;
}

}  // namespace

VerificationReport verify_lemmas(const GroupContext& ctx, const LemmaOptions& opts)
{
    LemmaRunner runner(ctx, opts);
    return runner.run();
}

}  // namespace coxwitness
