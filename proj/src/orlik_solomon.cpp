#include "coxwitness/orlik_solomon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "coxwitness/parallel.hpp"

namespace coxwitness {

namespace {

std::vector<int> positions_of(PositionSet m)
{
    std::vector<int> r;
    while (m) {
        r.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return r;
}

}  // namespace

void OSElement::add(PositionSet m, const CycloNumber& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

OSElement& OSElement::operator+=(const OSElement& b)
{
    for (const auto& [m, c] : b.terms)
        add(m, c);
    return *this;
}

OSElement& OSElement::operator-=(const OSElement& b)
{
    for (const auto& [m, c] : b.terms)
        add(m, -c);
    return *this;
}

OSElement operator*(const CycloNumber& c, const OSElement& a)
{
    OSElement r;
    for (const auto& [m, v] : a.terms)
        r.add(m, c * v);
    return r;
}

OrlikSolomon::OrlikSolomon(const Arrangement& arr, std::vector<int> order) : arr_(&arr), order_(std::move(order))
{
    const auto& g = arr.group();
    n_ = g.num_positive_roots();
    if (order_.empty()) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
    }
    if (static_cast<int>(order_.size()) != n_)
        throw std::invalid_argument("hyperplane order must list every reflection once");
    position_.assign(static_cast<std::size_t>(n_), -1);
    for (int p = 0; p < n_; ++p) {
        int t = order_[p];
        if (t < 0 || t >= n_ || position_[t] != -1)
            throw std::invalid_argument("hyperplane order must list every reflection once");
        position_[t] = p;
    }

    const int nl = arr.num_lattice();
    flat_positions_.assign(static_cast<std::size_t>(nl), 0);
    for (int x = 0; x < nl; ++x)
        for (int t = 0; t < n_; ++t)
            if (arr.lattice(x).reflections >> t & 1)
                flat_positions_[x] |= PositionSet{1} << position_[t];

    // X ∨ H_t is the unique flat one codimension down whose reflection set contains both.
    join_.assign(static_cast<std::size_t>(nl) * n_, -1);
    for (int x = 0; x < nl; ++x) {
        const auto& lx = arr.lattice(x);
        for (int t = 0; t < n_; ++t)
            if (lx.reflections >> t & 1)
                join_[static_cast<std::size_t>(x) * n_ + position_[t]] = x;
        for (int y = 0; y < nl; ++y) {
            const auto& ly = arr.lattice(y);
            if (ly.codim != lx.codim + 1 || (lx.reflections & ~ly.reflections) != 0)
                continue;
            for (int t = 0; t < n_; ++t)
                if ((ly.reflections & ~lx.reflections) >> t & 1)
                    join_[static_cast<std::size_t>(x) * n_ + position_[t]] = y;
        }
    }

    build_expansions();
    flat_basis_.assign(static_cast<std::size_t>(nl), {});
    for (std::size_t i = 0; i < basis_.size(); ++i)
        flat_basis_[flat_of(basis_[i])].push_back(static_cast<int>(i));
}

int OrlikSolomon::flat_of(PositionSet m) const
{
    int x = arr_->find(0);
    for (int p : positions_of(m))
        x = join(x, p);
    return x;
}

bool OrlikSolomon::is_independent(PositionSet m) const
{
    return arr_->lattice(flat_of(m)).codim == std::popcount(m);
}

bool OrlikSolomon::is_nbc(PositionSet m) const
{
    if (!is_independent(m))
        return false;
    // S is NBC iff each s_i is the least hyperplane of cl{s_i, …, s_k}.
    auto ps = positions_of(m);
    int x = arr_->find(0);
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
        x = join(x, *it);
        if (std::countr_zero(flat_positions_[x]) != *it)
            return false;
    }
    return true;
}

int OrlikSolomon::basis_index(PositionSet m) const
{
    auto it = basis_index_.find(m);
    return it == basis_index_.end() ? -1 : it->second;
}

std::vector<int> OrlikSolomon::degree_dims() const
{
    std::vector<int> dims(static_cast<std::size_t>(group().rank()) + 1);
    for (PositionSet m : basis_)
        ++dims[std::popcount(m)];
    return dims;
}

std::pair<PositionSet, int> OrlikSolomon::sort_with_sign(std::vector<int> positions)
{
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < positions.size(); ++i)
        for (std::size_t j = i; j > 0 && positions[j - 1] > positions[j]; --j) {
            std::swap(positions[j - 1], positions[j]);
            sign = -sign;
        }
    PositionSet m = 0;
    for (int p : positions) {
        if (m >> p & 1)
            return {0, 0};
        m |= PositionSet{1} << p;
    }
    return {m, sign};
}

void OrlikSolomon::build_expansions()
{
    // Independent sets by depth-first search on increasing positions.
    std::vector<PositionSet> independent;
    std::vector<std::pair<PositionSet, int>> stack{{0, arr_->find(0)}};
    while (!stack.empty()) {
        auto [m, x] = stack.back();
        stack.pop_back();
        independent.push_back(m);
        int start = m ? 64 - std::countl_zero(m) : 0;
        for (int p = start; p < n_; ++p) {
            int y = join(x, p);
            if (arr_->lattice(y).codim == arr_->lattice(x).codim + 1)
                stack.emplace_back(m | PositionSet{1} << p, y);
        }
    }
    for (PositionSet m : independent)
        if (is_nbc(m))
            basis_.push_back(m);
    std::sort(basis_.begin(), basis_.end(), [](PositionSet a, PositionSet b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    for (std::size_t i = 0; i < basis_.size(); ++i)
        basis_index_[basis_[i]] = static_cast<int>(i);
    for (PositionSet m : independent)
        compute_expansion(m);
}

std::vector<std::pair<int, Rational>> OrlikSolomon::compute_expansion(PositionSet m)
{
    if (auto it = expansions_.find(m); it != expansions_.end())
        return it->second;
    std::vector<std::pair<int, Rational>> result;
    if (auto idx = basis_index(m); idx >= 0) {
        result.emplace_back(idx, Rational(1));
        expansions_.emplace(m, result);
        return result;
    }
    // Find a broken circuit C ∖ {t} inside S and rewrite it with the circuit relation.
    auto ps = positions_of(m);
    int x = arr_->find(0);
    int t = -1;
    std::size_t first = 0;
    for (std::size_t i = ps.size(); i-- > 0;) {
        x = join(x, ps[i]);
        int low = std::countr_zero(flat_positions_[x]);
        if (low < ps[i]) {
            t = low;
            first = i;
            break;
        }
    }
    if (t < 0)
        throw std::logic_error("independent set is neither NBC nor contains a broken circuit");
    std::vector<int> b(ps.begin() + static_cast<std::ptrdiff_t>(first), ps.end());
    auto mask_of = [](const std::vector<int>& v) {
        PositionSet r = 0;
        for (int p : v)
            r |= PositionSet{1} << p;
        return r;
    };
    for (std::size_t k = 0; k < b.size();) {
        auto smaller = b;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
        if (flat_positions_[flat_of(mask_of(smaller))] >> t & 1)
            b = std::move(smaller);
        else
            ++k;
    }
    std::vector<int> rest = positions_of(m & ~mask_of(b));
    std::vector<int> concat = b;
    concat.insert(concat.end(), rest.begin(), rest.end());
    int sign0 = sort_with_sign(concat).second;

    std::map<int, Rational> acc;
    for (std::size_t j = 0; j < b.size(); ++j) {
        // a_{C∖c_0} = Σ_{j≥1} (-1)^{j+1} a_{C∖c_j} with C = {t < b_0 < b_1 < …}, c_j = b_{j-1}.
        std::vector<int> term{t};
        for (std::size_t k = 0; k < b.size(); ++k)
            if (k != j)
                term.push_back(b[k]);
        term.insert(term.end(), rest.begin(), rest.end());
        auto [tm, sg] = sort_with_sign(term);
        if (sg == 0 || !is_independent(tm))
            continue;
        int coef = sign0 * sg * (j % 2 == 0 ? 1 : -1);
        for (const auto& [idx, c] : compute_expansion(tm))
            acc[idx] += c * Rational(coef);
    }
    for (const auto& [idx, c] : acc)
        if (!c.is_zero())
            result.emplace_back(idx, c);
    expansions_.emplace(m, result);
    return result;
}

const std::vector<std::pair<int, Rational>>& OrlikSolomon::expansion(PositionSet m) const
{
    static const std::vector<std::pair<int, Rational>> empty;
    auto it = expansions_.find(m);
    return it == expansions_.end() ? empty : it->second;
}

void OrlikSolomon::add_expansion(OSElement& out, PositionSet m, int sign, const CycloNumber& c) const
{
    if (sign == 0)
        return;
    for (const auto& [idx, r] : expansion(m))
        out.add(basis_[idx], c * CycloNumber(r * Rational(sign)));
}

OSElement OrlikSolomon::straighten(const std::vector<int>& positions) const
{
    for (int p : positions)
        if (p < 0 || p >= n_)
            throw std::out_of_range("hyperplane position out of range");
    auto [m, sign] = sort_with_sign(positions);
    OSElement r;
    add_expansion(r, m, sign, CycloNumber(1));
    return r;
}

OSElement OrlikSolomon::monomial(const std::vector<int>& reflections) const
{
    std::vector<int> ps;
    for (int t : reflections) {
        if (t < 0 || t >= n_)
            throw std::out_of_range("reflection index out of range");
        ps.push_back(position_[t]);
    }
    return straighten(ps);
}

OSElement OrlikSolomon::product(const OSElement& a, const OSElement& b) const
{
    OSElement r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            if (ma & mb)
                continue;
            auto list = positions_of(ma);
            auto lb = positions_of(mb);
            list.insert(list.end(), lb.begin(), lb.end());
            auto [m, sign] = sort_with_sign(list);
            add_expansion(r, m, sign, ca * cb);
        }
    return r;
}

OSElement OrlikSolomon::act(int w, const OSElement& x) const
{
    const auto& g = group();
    OSElement r;
    for (const auto& [m, c] : x.terms) {
        std::vector<int> image;
        for (int p : positions_of(m))
            image.push_back(position_[g.act_on_root(w, order_[p]) % n_]);
        auto [im, sign] = sort_with_sign(image);
        add_expansion(r, im, sign, c);
    }
    return r;
}

OSElement OrlikSolomon::act(const GroupAlgebraElement& c, const OSElement& x) const
{
    OSElement r;
    for (int w = 0; w < group().size(); ++w)
        if (!c[w].is_zero())
            r += c[w] * act(w, x);
    return r;
}

std::vector<int> OrlikSolomon::shape_basis(int shape_id) const
{
    std::vector<int> r;
    for (int x : arr_->shape(shape_id).members)
        r.insert(r.end(), flat_basis_[x].begin(), flat_basis_[x].end());
    std::sort(r.begin(), r.end());
    return r;
}

CycloNumber OrlikSolomon::trace(int w, const std::vector<int>& basis_indices) const
{
    const auto& g = group();
    Rational acc;
    for (int i : basis_indices) {
        std::vector<int> image;
        for (int p : positions_of(basis_[i]))
            image.push_back(position_[g.act_on_root(w, order_[p]) % n_]);
        auto [im, sign] = sort_with_sign(image);
        for (const auto& [idx, r] : expansion(im))
            if (idx == i)
                acc += r * Rational(sign);
    }
    return CycloNumber(acc);
}

namespace {

ClassFunction character_on(const OrlikSolomon& os, const std::vector<int>& basis_indices)
{
    const auto& g = os.group();
    ClassFunction chi(g);
    parallel_for(static_cast<std::size_t>(g.num_classes()), [&](std::size_t c) {
        chi.at_class(static_cast<int>(c)) = os.trace(g.class_rep(static_cast<int>(c)), basis_indices);
    });
    return chi;
}

}  // namespace

ClassFunction OrlikSolomon::shape_character(int shape_id) const
{
    return character_on(*this, shape_basis(shape_id));
}

ClassFunction OrlikSolomon::degree_character(int p) const
{
    std::vector<int> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (std::popcount(basis_[i]) == p)
            idx.push_back(static_cast<int>(i));
    return character_on(*this, idx);
}

ClassFunction OrlikSolomon::total_character() const
{
    std::vector<int> idx(basis_.size());
    std::iota(idx.begin(), idx.end(), 0);
    return character_on(*this, idx);
}

std::string OrlikSolomon::to_string(const OSElement& x) const
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x.terms) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")*a[";
        bool f = true;
        for (int p : positions_of(m)) {
            os << (f ? "" : ",") << order_[p] + 1;
            f = false;
        }
        os << "]";
    }
    return os.str();
}

}  // namespace coxwitness
