#include "coxwitness/descent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coxwitness {

Rational Sigma::operator()(Subset i) const
{
    auto it = overrides.find(i);
    return it == overrides.end() ? default_value : it->second;
}

bool Sigma::is_constant_one() const
{
    if (!default_value.is_one())
        return false;
    for (const auto& [k, v] : overrides)
        if (!v.is_one())
            return false;
    return true;
}

void Sigma::validate() const
{
    if (default_value.sign() <= 0)
        throw std::invalid_argument("sigma values must be positive");
    for (const auto& [k, v] : overrides)
        if (v.sign() <= 0)
            throw std::invalid_argument("sigma value for subset " + subset_label(k) + " is not positive");
}

Sigma Sigma::from_json_text(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    auto to_rational = [](const nlohmann::json& v) {
        if (v.is_string())
            return Rational::parse(v.get<std::string>());
        if (v.is_number_integer())
            return Rational(v.get<std::int64_t>());
        throw std::invalid_argument("sigma values must be integers or strings like \"3/2\"");
    };
    Sigma s;
    if (j.contains("default"))
        s.default_value = to_rational(j["default"]);
    if (j.contains("overrides")) {
        for (const auto& [key, val] : j["overrides"].items()) {
            Subset mask;
            if (key.rfind("0b", 0) == 0)
                mask = static_cast<Subset>(std::stoul(key.substr(2), nullptr, 2));
            else
                mask = static_cast<Subset>(std::stoul(key, nullptr, 10));
            s.overrides[mask] = to_rational(val);
        }
    }
    s.validate();
    return s;
}

DescentElement& DescentElement::operator+=(const DescentElement& b)
{
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] += b.coords[i];
    return *this;
}

DescentElement& DescentElement::operator-=(const DescentElement& b)
{
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] -= b.coords[i];
    return *this;
}

DescentElement& DescentElement::operator*=(const CycloNumber& c)
{
    for (auto& x : coords)
        x *= c;
    return *this;
}

bool DescentElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const CycloNumber& c) { return c.is_zero(); });
}

DescentAlgebra::DescentAlgebra(const CoxeterGroup& g, Subset parabolic) : group_(&g), parabolic_(parabolic)
{
    if (!is_subset(parabolic, g.all_generators()))
        throw std::invalid_argument("parabolic subset out of range");
    stride_ = std::size_t{1} << g.rank();
    for (Subset i = 0; i < stride_; ++i)
        if (is_subset(i, parabolic))
            subsets_.push_back(i);
    std::stable_sort(subsets_.begin(), subsets_.end(),
                     [](Subset a, Subset b) { return popcount(a) < popcount(b) || (popcount(a) == popcount(b) && a < b); });
    elements_ = g.parabolic(parabolic);
    coset_reps_.resize(stride_);
    for (Subset i : subsets_)
        for (int w : elements_)
            if ((g.right_descents(w) & i) == 0)
                coset_reps_[i].push_back(w);

    // Structure constants, stored sparsely per (I, J).
    std::vector<std::vector<std::pair<Subset, int>>> table(stride_ * stride_);
    for (Subset i : subsets_)
        for (Subset j : subsets_) {
            auto& row = table[i * stride_ + j];
            for (int w : elements_)
                if ((g.left_descents(w) & i) == 0 && (g.right_descents(w) & j) == 0) {
                    Subset k = g.meet_subset(w, i, j);
                    auto it = std::find_if(row.begin(), row.end(), [k](const auto& p) { return p.first == k; });
                    if (it == row.end())
                        row.emplace_back(k, 1);
                    else
                        ++it->second;
                }
            std::sort(row.begin(), row.end());
        }
    sparse_ = std::move(table);

    // W_L-conjugacy classes of subsets: union I with every w(Δ_I) ⊆ Δ.
    std::vector<Subset> parent(stride_);
    std::iota(parent.begin(), parent.end(), Subset{0});
    auto root = [&](Subset x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int w : elements_)
        for (Subset i : subsets_) {
            auto img = g.image_of_simple_subset(w, i);
            if (img >= 0) {
                Subset a = root(i);
                Subset b = root(static_cast<Subset>(img));
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
    std::map<Subset, std::vector<Subset>> groups;
    for (Subset i : subsets_)
        groups[root(i)].push_back(i);
    for (auto& [r, members] : groups) {
        std::sort(members.begin(), members.end());
        shape_classes_.push_back(members);
    }
    auto lex_key = [](Subset s) {
        std::vector<int> idx;
        for (int b = 0; s >> b; ++b)
            if (s >> b & 1)
                idx.push_back(b);
        return idx;
    };
    std::sort(shape_classes_.begin(), shape_classes_.end(), [&](const auto& a, const auto& b) {
        if (popcount(a.front()) != popcount(b.front()))
            return popcount(a.front()) < popcount(b.front());
        auto la = lex_key(*std::min_element(a.begin(), a.end(), [&](Subset x, Subset y) { return lex_key(x) < lex_key(y); }));
        auto lb = lex_key(*std::min_element(b.begin(), b.end(), [&](Subset x, Subset y) { return lex_key(x) < lex_key(y); }));
        return la < lb;
    });
    shape_class_of_.assign(stride_, -1);
    for (std::size_t c = 0; c < shape_classes_.size(); ++c)
        for (Subset i : shape_classes_[c])
            shape_class_of_[i] = static_cast<int>(c);
}

int DescentAlgebra::structure_constant(Subset i, Subset j, Subset k) const
{
    for (const auto& [kk, n] : sparse_[i * stride_ + j])
        if (kk == k)
            return n;
    return 0;
}

DescentElement DescentAlgebra::zero() const
{
    return DescentElement{std::vector<CycloNumber>(stride_)};
}

DescentElement DescentAlgebra::x(Subset i) const
{
    auto r = zero();
    r.coords[i] = CycloNumber(1);
    return r;
}

GroupAlgebraElement DescentAlgebra::x_group(Subset i) const
{
    return GroupAlgebraElement::sum_of(*group_, coset_reps(i));
}

GroupAlgebraElement DescentAlgebra::to_group_algebra(const DescentElement& a) const
{
    auto r = GroupAlgebraElement::zero(*group_);
    for (Subset i : subsets_) {
        const auto& c = a.coords[i];
        if (c.is_zero())
            continue;
        for (int w : coset_reps(i))
            r[w] += c;
    }
    return r;
}

DescentElement DescentAlgebra::product(const DescentElement& a, const DescentElement& b) const
{
    auto r = zero();
    for (Subset i : subsets_) {
        if (a.coords[i].is_zero())
            continue;
        for (Subset j : subsets_) {
            if (b.coords[j].is_zero())
                continue;
            CycloNumber ab = a.coords[i] * b.coords[j];
            for (const auto& [k, n] : sparse_[i * stride_ + j])
                r.coords[k] += ab * CycloNumber(n);
        }
    }
    return r;
}

Rational DescentAlgebra::m(const Sigma& sigma, Subset j, Subset k) const
{
    if (!is_subset(j, k))
        return Rational(0);
    Rational acc;
    for (int w : coset_reps(k)) {
        auto img = group_->image_of_simple_subset(w, j);
        if (img >= 0)
            acc += sigma(static_cast<Subset>(img));
    }
    return acc;
}

BbhtSolution DescentAlgebra::solve(const Sigma& sigma) const
{
    sigma.validate();
    BbhtSolution sol;
    sol.sigma = sigma;
    sol.n.assign(stride_, std::vector<Rational>(stride_));
    sol.e.assign(stride_, zero());
    // x_K = Σ_{J ⊆ K} m_{JK} e_J is triangular in (|K|, K) order.
    for (Subset k : subsets_) {
        std::vector<Rational> nk(stride_);
        nk[k] = Rational(1);
        for (Subset j : subsets_) {
            if (j == k || !is_subset(j, k))
                continue;
            Rational mjk = m(sigma, j, k);
            if (mjk.is_zero())
                continue;
            for (Subset t : subsets_)
                if (!sol.n[j][t].is_zero())
                    nk[t] -= mjk * sol.n[j][t];
        }
        Rational mkk = m(sigma, k, k);
        for (auto& v : nk)
            v /= mkk;
        auto e = zero();
        for (Subset t : subsets_)
            e.coords[t] = CycloNumber(nk[t]);
        sol.n[k] = std::move(nk);
        sol.e[k] = std::move(e);
    }
    return sol;
}

Rational DescentAlgebra::sigma_of_class(const Sigma& sigma, int cls) const
{
    Rational acc;
    for (Subset i : shape_classes_[cls])
        acc += sigma(i);
    return acc;
}

DescentElement DescentAlgebra::e_lambda(const BbhtSolution& sol, int cls) const
{
    auto r = zero();
    for (Subset i : shape_classes_[cls])
        r += CycloNumber(sol.sigma(i)) * sol.e[i];
    return r;
}

Sigma DescentAlgebra::restrict_sigma(Subset k, const Sigma& sigma) const
{
    if (!is_subset(k, parabolic_))
        throw std::invalid_argument("restriction target is not contained in the parabolic");
    Sigma out;
    for (Subset i : subsets_)
        if (is_subset(i, k))
            out.overrides[i] = m(sigma, i, k);
    return out;
}

DescentElement DescentAlgebra::parabolic_embed(Subset k, const DescentElement& a) const
{
    if (!is_subset(k, parabolic_))
        throw std::invalid_argument("embedding source is not contained in the parabolic");
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!a.coords[i].is_zero() && !is_subset(static_cast<Subset>(i), k))
            throw std::invalid_argument("element is not in the descent algebra of W_K");
    return a;
}

std::string DescentAlgebra::to_string(const DescentElement& a) const
{
    std::ostringstream os;
    bool first = true;
    for (Subset i : subsets_) {
        if (a.coords[i].is_zero())
            continue;
        os << (first ? "" : " + ") << "(" << a.coords[i] << ")*x" << subset_label(i);
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

}  // namespace coxwitness
