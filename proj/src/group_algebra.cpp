#include "coxwitness/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "coxwitness/linalg.hpp"

namespace coxwitness {

GroupAlgebraElement GroupAlgebraElement::basis(const CoxeterGroup& g, int w, CycloNumber c)
{
    GroupAlgebraElement a(g);
    a.coeffs_[w] = std::move(c);
    return a;
}

GroupAlgebraElement GroupAlgebraElement::sum_of(const CoxeterGroup& g, const std::vector<int>& elems)
{
    GroupAlgebraElement a(g);
    for (int w : elems)
        a.coeffs_[w] += CycloNumber(1);
    return a;
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& b) const
{
    if (group_ != b.group_)
        throw std::invalid_argument("group algebra elements belong to different groups");
}

bool GroupAlgebraElement::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

int GroupAlgebraElement::support_size() const
{
    int n = 0;
    for (const auto& c : coeffs_)
        n += !c.is_zero();
    return n;
}

int GroupAlgebraElement::field_order() const
{
    std::int64_t n = 1;
    for (const auto& c : coeffs_)
        n = lcm_order(n, c.order());
    return static_cast<int>(n);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& b)
{
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!b.coeffs_[i].is_zero())
            coeffs_[i] += b.coeffs_[i];
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& b)
{
    check_same(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!b.coeffs_[i].is_zero())
            coeffs_[i] -= b.coeffs_[i];
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const CycloNumber& c)
{
    for (auto& x : coeffs_)
        if (!x.is_zero())
            x *= c;
    return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    a.check_same(b);
    const auto& g = *a.group_;
    GroupAlgebraElement r(g);
    std::vector<int> nz;
    for (int y = 0; y < g.size(); ++y)
        if (!b.coeffs_[y].is_zero())
            nz.push_back(y);
    for (int x = 0; x < g.size(); ++x) {
        const auto& cx = a.coeffs_[x];
        if (cx.is_zero())
            continue;
        for (int y : nz)
            r.coeffs_[g.mul(x, y)] += cx * b.coeffs_[y];
    }
    return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b)
{
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

GroupAlgebraElement GroupAlgebraElement::times_element(int w) const
{
    GroupAlgebraElement r(*group_);
    for (int x = 0; x < group_->size(); ++x)
        if (!coeffs_[x].is_zero())
            r.coeffs_[group_->mul(x, w)] = coeffs_[x];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::element_times(int w) const
{
    GroupAlgebraElement r(*group_);
    for (int x = 0; x < group_->size(); ++x)
        if (!coeffs_[x].is_zero())
            r.coeffs_[group_->mul(w, x)] = coeffs_[x];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::conjugated_by(int n) const
{
    GroupAlgebraElement r(*group_);
    int ninv = group_->inv(n);
    for (int x = 0; x < group_->size(); ++x)
        if (!coeffs_[x].is_zero())
            r.coeffs_[group_->mul(group_->mul(ninv, x), n)] = coeffs_[x];
    return r;
}

std::string GroupAlgebraElement::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int x = 0; x < group_->size(); ++x) {
        if (coeffs_[x].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << coeffs_[x] << ")*" << group_->word_string(x);
    }
    if (first)
        os << "0";
    return os.str();
}

std::size_t modular_rank_of(const std::vector<GroupAlgebraElement>& vectors, int prime_index)
{
    if (vectors.empty())
        return 0;
    std::int64_t order = 1;
    for (const auto& v : vectors)
        order = lcm_order(order, v.field_order());
    ModularImage f(static_cast<int>(order), prime_index);
    const auto& g = vectors.front().group();
    std::size_t cols = static_cast<std::size_t>(g.size());
    std::vector<std::uint64_t> entries(vectors.size() * cols);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            entries[i * cols + j] = f.reduce(vectors[i][static_cast<int>(j)]);
    return modular_rank(f, std::move(entries), vectors.size(), cols);
}

}  // namespace coxwitness
