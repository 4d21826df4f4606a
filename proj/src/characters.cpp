#include "coxwitness/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxwitness {

ClassFunction ClassFunction::from(const CoxeterGroup& g, const std::function<CycloNumber(int)>& f)
{
    ClassFunction r(g);
    for (int c = 0; c < g.num_classes(); ++c)
        r.values_[c] = f(g.class_rep(c));
    return r;
}

ClassFunction ClassFunction::trivial(const CoxeterGroup& g)
{
    return from(g, [](int) { return CycloNumber(1); });
}

ClassFunction ClassFunction::sign(const CoxeterGroup& g)
{
    return from(g, [&g](int w) { return CycloNumber(g.length(w) % 2 ? -1 : 1); });
}

ClassFunction ClassFunction::regular(const CoxeterGroup& g)
{
    return from(g, [&g](int w) { return CycloNumber(w == 0 ? g.size() : 0); });
}

void ClassFunction::check_same(const ClassFunction& b) const
{
    if (group_ != b.group_)
        throw std::invalid_argument("class functions on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& b)
{
    check_same(b);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += b.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& b)
{
    check_same(b);
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] -= b.values_[i];
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b)
{
    a.check_same(b);
    ClassFunction r = a;
    for (std::size_t i = 0; i < r.values_.size(); ++i)
        r.values_[i] *= b.values_[i];
    return r;
}

ClassFunction operator*(const CycloNumber& c, ClassFunction a)
{
    for (auto& v : a.values_)
        v *= c;
    return a;
}

bool operator==(const ClassFunction& a, const ClassFunction& b)
{
    return a.group_ == b.group_ && a.values_ == b.values_;
}

bool ClassFunction::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const CycloNumber& v) { return v.is_zero(); });
}

CycloNumber ClassFunction::inner(const ClassFunction& other) const
{
    check_same(other);
    CycloNumber acc;
    for (int c = 0; c < group_->num_classes(); ++c) {
        auto sz = static_cast<std::int64_t>(group_->class_members(c).size());
        acc += CycloNumber(sz) * values_[c] * other.values_[c].conj();
    }
    return acc / CycloNumber(group_->size());
}

std::string ClassFunction::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << (i ? ", " : "") << values_[i];
    os << ")";
    return os.str();
}

int LinearCharacter::exponent_of(int w) const
{
    auto it = std::lower_bound(subgroup.begin(), subgroup.end(), w);
    if (it == subgroup.end() || *it != w)
        throw std::invalid_argument("element outside the character's subgroup");
    return exponents[static_cast<std::size_t>(it - subgroup.begin())];
}

CycloNumber LinearCharacter::operator()(int w) const
{
    return CycloNumber::root_of_unity(order, exponent_of(w));
}

bool LinearCharacter::is_trivial() const
{
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

LinearCharacter LinearCharacter::operator*(const LinearCharacter& other) const
{
    if (subgroup != other.subgroup)
        throw std::invalid_argument("characters of different subgroups");
    LinearCharacter r;
    r.subgroup = subgroup;
    r.generators = generators.empty() ? other.generators : generators;
    r.order = static_cast<int>(lcm_order(order, other.order));
    r.exponents.resize(subgroup.size());
    for (std::size_t i = 0; i < subgroup.size(); ++i)
        r.exponents[i] = (exponents[i] * (r.order / order) + other.exponents[i] * (r.order / other.order)) % r.order;
    // Reduce to the smallest order that still holds every value.
    int g = r.order;
    for (int e : r.exponents)
        g = std::gcd(g, e);
    if (g > 1) {
        r.order /= g;
        for (auto& e : r.exponents)
            e /= g;
    }
    return r;
}

std::string LinearCharacter::describe(const CoxeterGroup& g) const
{
    std::ostringstream os;
    bool first = true;
    for (int x : generators) {
        int e = exponent_of(x);
        int d = std::gcd(e, order);
        os << (first ? "" : ", ") << g.word_string(x) << "->";
        if (e == 0)
            os << "1";
        else
            os << "E(" << order / d << ")^" << e / d;
        first = false;
    }
    if (first)
        os << "trivial";
    return os.str();
}

std::vector<int> generate_subgroup(const CoxeterGroup& g, const std::vector<int>& gens)
{
    std::vector<char> in(static_cast<std::size_t>(g.size()), 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (std::size_t q = 0; q < members.size(); ++q)
        for (int s : gens) {
            int x = g.mul(members[q], s);
            if (!in[x]) {
                in[x] = 1;
                members.push_back(x);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> derived_subgroup(const CoxeterGroup& g, const std::vector<int>& h)
{
    std::set<int> comms;
    for (int a : h)
        for (int b : h)
            comms.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    return generate_subgroup(g, std::vector<int>(comms.begin(), comms.end()));
}

LinearCharacter make_linear_character(const CoxeterGroup&, const std::vector<int>& h, int order,
                                      const std::function<int(int)>& exponent)
{
    LinearCharacter r;
    r.subgroup = h;
    std::sort(r.subgroup.begin(), r.subgroup.end());
    r.order = order;
    for (int x : r.subgroup)
        r.exponents.push_back(((exponent(x) % order) + order) % order);
    return r;
}

bool is_homomorphism(const CoxeterGroup& g, const LinearCharacter& phi)
{
    for (int a : phi.subgroup)
        for (int b : phi.subgroup) {
            auto ab = std::lower_bound(phi.subgroup.begin(), phi.subgroup.end(), g.mul(a, b));
            if (ab == phi.subgroup.end() || *ab != g.mul(a, b))
                return false;
            if ((phi.exponent_of(a) + phi.exponent_of(b)) % phi.order != phi.exponent_of(g.mul(a, b)))
                return false;
        }
    return true;
}

std::vector<LinearCharacter> linear_characters(const CoxeterGroup& g, const std::vector<int>& h_in)
{
    std::vector<int> h = h_in;
    std::sort(h.begin(), h.end());
    auto derived = derived_subgroup(g, h);

    // Cosets of [H, H]; coset id by least member.
    std::vector<int> coset(static_cast<std::size_t>(g.size()), -1);
    std::vector<int> reps;
    for (int x : h) {
        if (coset[x] >= 0)
            continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int d : derived)
            coset[g.mul(x, d)] = id;
    }
    const int q = static_cast<int>(reps.size());
    auto coset_mul = [&](int a, int b) { return coset[g.mul(reps[a], reps[b])]; };
    auto coset_order = [&](int a) {
        int k = 1;
        for (int x = a; x != coset[0]; x = coset_mul(x, a))
            ++k;
        return k;
    };

    // Greedy generating set of the abelian quotient.
    std::vector<int> gens;
    std::vector<char> covered(static_cast<std::size_t>(q), 0);
    auto regenerate = [&]() {
        std::fill(covered.begin(), covered.end(), 0);
        std::vector<int> members{coset[0]};
        covered[coset[0]] = 1;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int s : gens) {
                int y = coset_mul(members[i], s);
                if (!covered[y]) {
                    covered[y] = 1;
                    members.push_back(y);
                }
            }
        return members.size();
    };
    regenerate();
    for (int c = 0; c < q; ++c)
        if (!covered[c]) {
            gens.push_back(c);
            regenerate();
        }

    int exponent = 1;
    std::vector<int> gen_orders;
    for (int s : gens) {
        gen_orders.push_back(coset_order(s));
        exponent = static_cast<int>(lcm_order(exponent, gen_orders.back()));
    }

    std::vector<LinearCharacter> out;
    std::vector<int> assign(gens.size(), 0);  // a_i in [0, o_i): value ζ_{o_i}^{a_i}
    for (;;) {
        // Propagate along a BFS tree and test consistency on every edge.
        std::vector<int> val(static_cast<std::size_t>(q), -1);
        val[coset[0]] = 0;
        std::vector<int> queue{coset[0]};
        bool ok = true;
        for (std::size_t i = 0; i < queue.size() && ok; ++i)
            for (std::size_t k = 0; k < gens.size() && ok; ++k) {
                int y = coset_mul(queue[i], gens[k]);
                int v = (val[queue[i]] + assign[k] * (exponent / gen_orders[k])) % exponent;
                if (val[y] < 0) {
                    val[y] = v;
                    queue.push_back(y);
                } else if (val[y] != v) {
                    ok = false;
                }
            }
        if (ok) {
            LinearCharacter chi;
            chi.subgroup = h;
            chi.order = exponent;
            for (int x : h)
                chi.exponents.push_back(val[coset[x]]);
            for (int s : gens)
                chi.generators.push_back(reps[s]);
            out.push_back(std::move(chi));
        }
        int pos = static_cast<int>(gens.size()) - 1;
        while (pos >= 0 && ++assign[pos] == gen_orders[pos]) {
            assign[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    if (static_cast<int>(out.size()) != q)
        throw std::logic_error("linear character enumeration is incomplete");
    return out;
}

ClassFunction induce(const CoxeterGroup& g, const std::vector<int>& h, const std::function<CycloNumber(int)>& f)
{
    std::vector<CycloNumber> sums(static_cast<std::size_t>(g.num_classes()));
    for (int x : h)
        sums[g.class_of(x)] += f(x);
    ClassFunction r(g);
    auto hs = static_cast<std::int64_t>(h.size());
    for (int c = 0; c < g.num_classes(); ++c) {
        if (sums[c].is_zero())
            continue;
        auto cs = static_cast<std::int64_t>(g.class_members(c).size());
        // |Z_W(w)| / |H| = |W| / (|class| · |H|)
        r.at_class(c) = sums[c] * CycloNumber(Rational(g.size(), cs * hs));
    }
    return r;
}

ClassFunction induce(const CoxeterGroup& g, const LinearCharacter& phi)
{
    return induce(g, phi.subgroup, [&phi](int x) { return phi(x); });
}

CycloNumber induced_value(const CoxeterGroup& g, const std::vector<int>& k, const std::vector<int>& h,
                          const std::function<CycloNumber(int)>& f, int x)
{
    std::vector<char> in_h(static_cast<std::size_t>(g.size()));
    for (int y : h)
        in_h[y] = 1;
    CycloNumber acc;
    for (int y : k) {
        int z = g.mul(g.mul(g.inv(y), x), y);
        if (in_h[z])
            acc += f(z);
    }
    return acc * CycloNumber(Rational(1, static_cast<std::int64_t>(h.size())));
}

CycloNumber subgroup_inner(const std::vector<int>& h, const std::function<CycloNumber(int)>& f,
                           const std::function<CycloNumber(int)>& g)
{
    CycloNumber acc;
    for (int x : h)
        acc += f(x) * g(x).conj();
    return acc / CycloNumber(static_cast<std::int64_t>(h.size()));
}

ClassFunction ideal_character(const GroupAlgebraElement& e, bool check_idempotent)
{
    const auto& g = e.group();
    if (check_idempotent && !(e * e == e))
        throw std::invalid_argument("ideal_character: element is not idempotent");
    ClassFunction r(g);
    for (int c = 0; c < g.num_classes(); ++c) {
        int w = g.class_rep(c);
        int cinv = g.class_of(g.inv(w));
        CycloNumber acc;
        for (int y : g.class_members(cinv))
            acc += e[y];
        auto z = static_cast<std::int64_t>(g.size() / static_cast<int>(g.class_members(c).size()));
        r.at_class(c) = acc * CycloNumber(z);
    }
    return r;
}

CycloNumber twisted_parabolic_trace(const GroupAlgebraElement& e, const std::vector<int>& parabolic, int w, int n)
{
    const auto& g = e.group();
    int ninv = g.inv(n);
    int winv = g.inv(w);
    CycloNumber acc;
    for (int y : parabolic) {
        // coefficient of y in n⁻¹·e·y·w·n is e(n y n⁻¹ w⁻¹ y⁻¹)
        int z = g.mul(g.mul(g.mul(n, y), ninv), g.mul(winv, g.inv(y)));
        acc += e[z];
    }
    return acc;
}

}  // namespace coxwitness
