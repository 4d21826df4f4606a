#include "coxwitness/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace coxwitness {

namespace {

constexpr int kMaxOrder = 1152;
constexpr int kMaxRank = 8;

using CMatrix = std::vector<std::vector<int>>;

CMatrix blank(int n)
{
    CMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

void bond(CMatrix& m, int a, int b, int v)
{
    m[a][b] = v;
    m[b][a] = v;
}

struct IrreducibleType {
    std::string label;
    CMatrix matrix;
    long order;
};

long factorial(int n)
{
    long r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Canonical Bourbaki-ordered matrices of the supported irreducible types.
const std::vector<IrreducibleType>& supported_types()
{
    static const std::vector<IrreducibleType> types = [] {
        std::vector<IrreducibleType> t;
        for (int n = 1; n <= 5; ++n) {
            CMatrix m = blank(n);
            for (int i = 0; i + 1 < n; ++i)
                bond(m, i, i + 1, 3);
            t.push_back({"A" + std::to_string(n), m, factorial(n + 1)});
        }
        for (int n = 3; n <= 4; ++n) {
            CMatrix m = blank(n);
            for (int i = 0; i + 2 < n; ++i)
                bond(m, i, i + 1, 3);
            bond(m, n - 2, n - 1, 4);
            t.push_back({"B" + std::to_string(n), m, (1L << n) * factorial(n)});
        }
        {
            CMatrix m = blank(4);
            bond(m, 0, 1, 3);
            bond(m, 1, 2, 3);
            bond(m, 1, 3, 3);
            t.push_back({"D4", m, 192});
        }
        {
            CMatrix m = blank(3);
            bond(m, 0, 1, 5);
            bond(m, 1, 2, 3);
            t.push_back({"H3", m, 120});
        }
        for (int k = 4; k <= 12; ++k) {
            CMatrix m = blank(2);
            bond(m, 0, 1, k);
            std::string label = k == 4 ? "B2" : "I2(" + std::to_string(k) + ")";
            t.push_back({label, m, 2L * k});
        }
        return t;
    }();
    return types;
}

const IrreducibleType* find_type(const std::string& label)
{
    for (const auto& t : supported_types())
        if (t.label == label)
            return &t;
    return nullptr;
}

std::string describe_component(const std::vector<int>& gens)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < gens.size(); ++i)
        os << (i ? "," : "") << "s" << gens[i] + 1;
    os << "}";
    return os.str();
}

/// Matches a connected component against the supported list, trying every
/// relabeling of its generators.
const IrreducibleType* classify_component(const CMatrix& m, const std::vector<int>& gens)
{
    std::size_t k = gens.size();
    for (const auto& t : supported_types()) {
        if (t.matrix.size() != k)
            continue;
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (std::size_t a = 0; a < k && ok; ++a)
                for (std::size_t b = 0; b < k && ok; ++b)
                    ok = m[gens[p[a]]][gens[p[b]]] == t.matrix[a][b];
            if (ok)
                return &t;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return nullptr;
}

std::uint64_t perm_key(const std::uint16_t* perm, int rank)
{
    std::uint64_t key = 0;
    for (int j = 0; j < rank; ++j)
        key = (key << 8) | perm[j];
    return key;
}

}  // namespace

std::string subset_label(Subset s)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; s >> i; ++i)
        if (s >> i & 1) {
            os << (first ? "" : ",") << i + 1;
            first = false;
        }
    os << "}";
    return os.str();
}

CoxeterDiagram CoxeterDiagram::parse(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("empty Coxeter diagram");
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == 'x' || ch == 'X') {
            if (cur.empty())
                throw std::invalid_argument("malformed Coxeter diagram '" + text + "'");
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
        }
    }
    if (cur.empty())
        throw std::invalid_argument("malformed Coxeter diagram '" + text + "'");
    tokens.push_back(cur);

    CoxeterDiagram d;
    long order = 1;
    std::vector<const IrreducibleType*> parts;
    for (const auto& tok : tokens) {
        std::string canon = tok;
        if (tok == "I2(2)")
            throw std::invalid_argument("unsupported component '" + tok + "' (use A1xA1)");
        if (tok == "I2(3)")
            canon = "A2";
        else if (tok == "I2(4)" || tok == "C2")
            canon = "B2";
        else if (tok == "B1" || tok == "C1")
            canon = "A1";
        else if (tok.size() == 2 && tok[0] == 'C')
            canon = "B" + tok.substr(1);
        const IrreducibleType* t = find_type(canon);
        if (!t)
            throw std::invalid_argument("unsupported or infinite component '" + tok + "'");
        parts.push_back(t);
        d.rank += static_cast<int>(t->matrix.size());
        order *= t->order;
    }
    if (order > kMaxOrder)
        throw std::invalid_argument("group '" + text + "' has order " + std::to_string(order) + " > "
                                    + std::to_string(kMaxOrder));
    if (d.rank > kMaxRank)
        throw std::invalid_argument("rank of '" + text + "' exceeds " + std::to_string(kMaxRank));
    d.m = blank(d.rank);
    int offset = 0;
    for (const auto* t : parts) {
        int k = static_cast<int>(t->matrix.size());
        std::vector<int> gens;
        for (int a = 0; a < k; ++a) {
            gens.push_back(offset + a);
            for (int b = 0; b < k; ++b)
                d.m[offset + a][offset + b] = t->matrix[a][b];
        }
        d.component_labels.push_back(t->label);
        d.components.push_back(gens);
        if (!d.label.empty())
            d.label += "x";
        d.label += t->label;
        offset += k;
    }
    return d;
}

CoxeterDiagram CoxeterDiagram::from_matrix(const std::vector<std::vector<int>>& m)
{
    CoxeterDiagram d;
    d.rank = static_cast<int>(m.size());
    if (d.rank > kMaxRank)
        throw std::invalid_argument("rank exceeds " + std::to_string(kMaxRank));
    for (int i = 0; i < d.rank; ++i) {
        if (static_cast<int>(m[i].size()) != d.rank)
            throw std::invalid_argument("Coxeter matrix is not square");
        if (m[i][i] != 1)
            throw std::invalid_argument("Coxeter matrix must have 1 on the diagonal");
        for (int j = 0; j < d.rank; ++j)
            if (i != j && (m[i][j] < 2 || m[i][j] != m[j][i]))
                throw std::invalid_argument("Coxeter matrix must be symmetric with entries >= 2");
    }
    d.m = m;
    std::vector<int> comp(static_cast<std::size_t>(d.rank), -1);
    long order = 1;
    for (int start = 0; start < d.rank; ++start) {
        if (comp[start] >= 0)
            continue;
        std::vector<int> gens{start};
        comp[start] = static_cast<int>(d.components.size());
        for (std::size_t q = 0; q < gens.size(); ++q)
            for (int j = 0; j < d.rank; ++j)
                if (comp[j] < 0 && m[gens[q]][j] != 2) {
                    comp[j] = comp[start];
                    gens.push_back(j);
                }
        std::sort(gens.begin(), gens.end());
        const IrreducibleType* t = classify_component(m, gens);
        if (!t)
            throw std::invalid_argument("unsupported or infinite component " + describe_component(gens));
        order *= t->order;
        d.component_labels.push_back(t->label);
        d.components.push_back(gens);
        if (!d.label.empty())
            d.label += "x";
        d.label += t->label;
    }
    if (d.rank == 0)
        d.label = "A0";
    if (order > kMaxOrder)
        throw std::invalid_argument("group order " + std::to_string(order) + " exceeds " + std::to_string(kMaxOrder));
    return d;
}

CoxeterDiagram CoxeterDiagram::restrict_to(Subset sub) const
{
    std::vector<int> gens;
    for (int i = 0; i < rank; ++i)
        if (sub >> i & 1)
            gens.push_back(i);
    CMatrix r(gens.size(), std::vector<int>(gens.size()));
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = 0; b < gens.size(); ++b)
            r[a][b] = m[gens[a]][gens[b]];
    return from_matrix(r);
}

Element Element::operator*(const Element& other) const
{
    if (group != other.group)
        throw std::invalid_argument("elements belong to different groups");
    return Element{group->mul(index, other.index), group};
}

Element Element::inverse() const { return Element{group->inv(index), group}; }
int Element::length() const { return group->length(index); }
Subset Element::right_descents() const { return group->right_descents(index); }
Subset Element::left_descents() const { return group->left_descents(index); }
std::vector<int> Element::reduced_word() const { return group->word(index); }

CoxeterGroup::CoxeterGroup(CoxeterDiagram diagram) : diagram_(std::move(diagram)), rank_(diagram_.rank)
{
    if (rank_ > kMaxRank)
        throw std::invalid_argument("rank exceeds " + std::to_string(kMaxRank));
    build_roots();
    build_elements();
    build_classes();
}

void CoxeterGroup::build_roots()
{
    auto n = static_cast<std::size_t>(rank_);
    gram_ = Matrix<CycloNumber>(n, n);
    field_order_ = 1;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            int mij = diagram_.m[i][j];
            gram_(i, j) = i == j ? CycloNumber(1) : -CycloNumber::cos_2pi(2 * mij, 1);
            field_order_ = static_cast<int>(lcm_order(field_order_, gram_(i, j).order()));
        }

    auto reflect = [&](int s, const std::vector<CycloNumber>& v) {
        CycloNumber dot;
        for (int j = 0; j < rank_; ++j)
            if (!v[j].is_zero() && !gram_(s, j).is_zero())
                dot += gram_(s, j) * v[j];
        std::vector<CycloNumber> r = v;
        r[s] -= CycloNumber(2) * dot;
        return r;
    };
    auto find = [&](const std::vector<CycloNumber>& v) {
        for (std::size_t k = 0; k < roots_.size(); ++k)
            if (roots_[k] == v)
                return static_cast<int>(k);
        return -1;
    };

    for (int i = 0; i < rank_; ++i) {
        std::vector<CycloNumber> e(n);
        e[i] = CycloNumber(1);
        roots_.push_back(e);
        root_depth_.push_back(0);
    }
    // s_i permutes the positive roots other than α_i, so closing Δ under that
    // rule yields Φ⁺ without needing an ordering on the coefficient field.
    for (std::size_t q = 0; q < roots_.size(); ++q) {
        for (int s = 0; s < rank_; ++s) {
            if (static_cast<int>(q) == s)
                continue;
            auto img = reflect(s, roots_[q]);
            if (find(img) < 0) {
                roots_.push_back(img);
                root_depth_.push_back(root_depth_[q] + 1);
            }
        }
    }
    npos_ = static_cast<int>(roots_.size());
    if (2 * npos_ > 255)
        throw std::invalid_argument("root system too large");
    for (int i = 0; i < npos_; ++i) {
        std::vector<CycloNumber> neg;
        for (const auto& c : roots_[i])
            neg.push_back(-c);
        roots_.push_back(neg);
        Subset sup = 0;
        for (int j = 0; j < rank_; ++j)
            if (!roots_[i][j].is_zero())
                sup |= Subset{1} << j;
        root_support_.push_back(sup);
    }
    simple_perm_.assign(n, std::vector<int>(static_cast<std::size_t>(2 * npos_)));
    for (int s = 0; s < rank_; ++s)
        for (int r = 0; r < 2 * npos_; ++r) {
            int k = find(reflect(s, roots_[r]));
            if (k < 0)
                throw std::logic_error("root system not closed under simple reflections");
            simple_perm_[s][r] = k;
        }
}

void CoxeterGroup::build_elements()
{
    const int nr = 2 * npos_;
    const auto unr = static_cast<std::size_t>(nr);
    std::vector<std::vector<std::uint16_t>> found;
    std::unordered_map<std::uint64_t, int> index_of;
    std::vector<std::uint16_t> id(unr);
    std::iota(id.begin(), id.end(), 0);
    found.push_back(id);
    index_of[perm_key(id.data(), rank_)] = 0;
    for (std::size_t q = 0; q < found.size(); ++q) {
        for (int s = 0; s < rank_; ++s) {
            std::vector<std::uint16_t> p(unr);
            for (int r = 0; r < nr; ++r)
                p[r] = found[q][simple_perm_[s][r]];
            auto key = perm_key(p.data(), rank_);
            if (index_of.count(key))
                continue;
            index_of[key] = static_cast<int>(found.size());
            found.push_back(std::move(p));
            if (found.size() > static_cast<std::size_t>(kMaxOrder))
                throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
        }
    }
    const int count = static_cast<int>(found.size());

    std::vector<int> len(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w) {
        int l = 0;
        for (int r = 0; r < npos_; ++r)
            l += found[w][r] >= npos_;
        len[w] = l;
    }
    auto left_mul = [&](int s, int w) {
        std::vector<std::uint16_t> p(unr);
        for (int r = 0; r < nr; ++r)
            p[r] = static_cast<std::uint16_t>(simple_perm_[s][found[w][r]]);
        return index_of.at(perm_key(p.data(), rank_));
    };
    // Lex-least reduced word: strip the smallest left descent repeatedly.
    std::vector<int> by_len(static_cast<std::size_t>(count));
    std::iota(by_len.begin(), by_len.end(), 0);
    std::stable_sort(by_len.begin(), by_len.end(), [&](int a, int b) { return len[a] < len[b]; });
    std::vector<std::vector<int>> words(static_cast<std::size_t>(count));
    for (int w : by_len) {
        if (len[w] == 0)
            continue;
        for (int s = 0; s < rank_; ++s) {
            int sw = left_mul(s, w);
            if (len[sw] < len[w]) {
                words[w].push_back(s);
                words[w].insert(words[w].end(), words[sw].begin(), words[sw].end());
                break;
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (len[a] != len[b])
            return len[a] < len[b];
        return words[a] < words[b];
    });

    size_ = count;
    perms_.resize(static_cast<std::size_t>(count) * unr);
    length_.resize(static_cast<std::size_t>(count));
    words_.resize(static_cast<std::size_t>(count));
    std::unordered_map<std::uint64_t, int> canon;
    for (int w = 0; w < count; ++w) {
        int old = order[w];
        std::copy(found[old].begin(), found[old].end(), perms_.begin() + static_cast<std::ptrdiff_t>(w * unr));
        length_[w] = len[old];
        words_[w] = std::move(words[old]);
        canon[perm_key(&perms_[w * unr], rank_)] = w;
    }

    std::vector<int> rmul(static_cast<std::size_t>(count * rank_));
    std::vector<std::uint16_t> p(unr);
    for (int w = 0; w < count; ++w)
        for (int s = 0; s < rank_; ++s) {
            for (int j = 0; j < rank_; ++j)
                p[j] = perms_[w * unr + simple_perm_[s][j]];
            rmul[w * rank_ + s] = canon.at(perm_key(p.data(), rank_));
        }
    gen_.resize(static_cast<std::size_t>(rank_));
    for (int s = 0; s < rank_; ++s)
        gen_[s] = rmul[s];

    mult_.assign(static_cast<std::size_t>(count) * count, 0);
    std::vector<int> prefix(static_cast<std::size_t>(count), 0);
    for (int u = 1; u < count; ++u)
        prefix[u] = rmul[u * rank_ + words_[u].back()];  // u·s_last drops the last letter
    for (int w = 0; w < count; ++w) {
        auto* row = &mult_[static_cast<std::size_t>(w) * count];
        row[0] = static_cast<std::uint16_t>(w);
        for (int u = 1; u < count; ++u)
            row[u] = static_cast<std::uint16_t>(rmul[row[prefix[u]] * rank_ + words_[u].back()]);
    }

    inv_.assign(static_cast<std::size_t>(count), -1);
    for (int w = 0; w < count; ++w) {
        const auto* row = &mult_[static_cast<std::size_t>(w) * count];
        for (int u = 0; u < count; ++u)
            if (row[u] == 0) {
                inv_[w] = u;
                break;
            }
    }
    rdesc_.assign(static_cast<std::size_t>(count), 0);
    support_.assign(static_cast<std::size_t>(count), 0);
    for (int w = 0; w < count; ++w) {
        for (int s = 0; s < rank_; ++s)
            if (perms_[w * unr + s] >= npos_)
                rdesc_[w] |= Subset{1} << s;
        for (int s : words_[w])
            support_[w] |= Subset{1} << s;
    }
    ldesc_.resize(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w)
        ldesc_[w] = rdesc_[inv_[w]];
    longest_ = count - 1;

    reflections_.assign(static_cast<std::size_t>(npos_), -1);
    reflection_root_.assign(static_cast<std::size_t>(count), -1);
    for (int w = 0; w < count; ++w)
        for (int s = 0; s < rank_; ++s) {
            int r = perms_[w * unr + s];
            if (r < npos_ && reflections_[r] < 0) {
                int t = mul(mul(w, gen_[s]), inv_[w]);
                reflections_[r] = t;
                reflection_root_[t] = r;
            }
        }
}

void CoxeterGroup::build_classes()
{
    class_of_.assign(static_cast<std::size_t>(size_), -1);
    for (int w = 0; w < size_; ++w) {
        if (class_of_[w] >= 0)
            continue;
        int c = static_cast<int>(classes_.size());
        std::vector<int> members{w};
        class_of_[w] = c;
        for (std::size_t q = 0; q < members.size(); ++q)
            for (int s = 0; s < rank_; ++s) {
                int x = conjugate(gen_[s], members[q]);
                if (class_of_[x] < 0) {
                    class_of_[x] = c;
                    members.push_back(x);
                }
            }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
    }
}

int CoxeterGroup::from_word(std::span<const int> word) const
{
    int w = 0;
    for (int s : word) {
        if (s < 0 || s >= rank_)
            throw std::out_of_range("generator index out of range");
        w = mul(w, gen_[s]);
    }
    return w;
}

int CoxeterGroup::element_order(int w) const
{
    int k = 1;
    for (int x = w; x != 0; x = mul(x, w))
        ++k;
    return k;
}

std::string CoxeterGroup::word_string(int w) const
{
    if (words_[w].empty())
        return "1";
    std::string s;
    for (int g : words_[w])
        s += "s" + std::to_string(g + 1);
    return s;
}

std::vector<int> CoxeterGroup::word_labels(int w) const
{
    std::vector<int> r = words_[w];
    for (auto& g : r)
        ++g;
    return r;
}

std::vector<int> CoxeterGroup::centralizer(int w) const
{
    std::vector<int> r;
    for (int g = 0; g < size_; ++g)
        if (mul(g, w) == mul(w, g))
            r.push_back(g);
    return r;
}

std::vector<int> CoxeterGroup::coset_reps(Subset i) const
{
    std::vector<int> r;
    for (int w = 0; w < size_; ++w)
        if ((rdesc_[w] & i) == 0)
            r.push_back(w);
    return r;
}

std::vector<int> CoxeterGroup::double_coset_reps(Subset i, Subset j) const
{
    std::vector<int> r;
    for (int w = 0; w < size_; ++w)
        if ((ldesc_[w] & i) == 0 && (rdesc_[w] & j) == 0)
            r.push_back(w);
    return r;
}

Subset CoxeterGroup::meet_subset(int w, Subset i, Subset j) const
{
    Subset k = 0;
    for (int s = 0; s < rank_; ++s)
        if (j >> s & 1) {
            int r = act_on_root(w, s);
            if (r < rank_ && (i >> r & 1))
                k |= Subset{1} << s;
        }
    return k;
}

std::vector<int> CoxeterGroup::refined_double_coset_reps(Subset i, Subset j, Subset k) const
{
    std::vector<int> r;
    for (int w : double_coset_reps(i, j))
        if (meet_subset(w, i, j) == k)
            r.push_back(w);
    return r;
}

std::int64_t CoxeterGroup::image_of_simple_subset(int w, Subset i) const
{
    Subset img = 0;
    for (int s = 0; s < rank_; ++s)
        if (i >> s & 1) {
            int r = act_on_root(w, s);
            if (r >= rank_)
                return -1;
            img |= Subset{1} << r;
        }
    return img;
}

std::vector<int> CoxeterGroup::parabolic(Subset i) const
{
    std::vector<int> r;
    for (int w = 0; w < size_; ++w)
        if (is_subset(support_[w], i))
            r.push_back(w);
    return r;
}

int CoxeterGroup::longest_in(Subset i) const
{
    int best = 0;
    for (int w : parabolic(i))
        if (length_[w] > length_[best])
            best = w;
    return best;
}

std::vector<int> CoxeterGroup::normalizer(Subset i) const
{
    std::vector<int> sub_roots;
    for (int r = 0; r < npos_; ++r)
        if (is_subset(root_support_[r], i))
            sub_roots.push_back(r);
    std::vector<int> out;
    for (int w = 0; w < size_; ++w) {
        bool ok = true;
        for (int r : sub_roots)
            if (!is_subset(root_support(act_on_root(w, r)), i)) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(w);
    }
    return out;
}

std::vector<int> CoxeterGroup::parabolic_complement(Subset i) const
{
    std::vector<int> out;
    for (int w = 0; w < size_; ++w)
        if (image_of_simple_subset(w, i) == static_cast<std::int64_t>(i))
            out.push_back(w);
    return out;
}

Matrix<CycloNumber> CoxeterGroup::matrix(int w) const
{
    auto n = static_cast<std::size_t>(rank_);
    Matrix<CycloNumber> m(n, n);
    for (int j = 0; j < rank_; ++j) {
        const auto& img = roots_[act_on_root(w, j)];
        for (int i = 0; i < rank_; ++i)
            m(i, j) = img[i];
    }
    return m;
}

std::vector<std::vector<CycloNumber>> CoxeterGroup::fix_basis(int w) const
{
    auto n = static_cast<std::size_t>(rank_);
    return nullspace(matrix(w) - Matrix<CycloNumber>::identity(n));
}

CycloNumber CoxeterGroup::det_on_subspace(int w, const std::vector<std::vector<CycloNumber>>& basis) const
{
    if (basis.empty())
        return CycloNumber(1);
    auto n = static_cast<std::size_t>(rank_);
    Matrix<CycloNumber> u(n, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            u(i, j) = basis[j][i];
    auto mu = matrix(w) * u;
    auto r = solve(u, mu);
    if (!r || !(u * *r == mu))
        throw std::invalid_argument("element " + word_string(w) + " does not stabilize the subspace");
    return determinant(*r);
}

CycloNumber CoxeterGroup::form(const std::vector<CycloNumber>& u, const std::vector<CycloNumber>& v) const
{
    CycloNumber acc;
    for (int i = 0; i < rank_; ++i) {
        if (u[i].is_zero())
            continue;
        for (int j = 0; j < rank_; ++j)
            if (!v[j].is_zero() && !gram_(i, j).is_zero())
                acc += u[i] * gram_(i, j) * v[j];
    }
    return acc;
}

}  // namespace coxwitness
