#include "coxwitness/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace coxwitness {

namespace {

std::vector<int> indices(Subset s)
{
    std::vector<int> r;
    for (int i = 0; s >> i; ++i)
        if (s >> i & 1)
            r.push_back(i);
    return r;
}

bool lex_less(Subset a, Subset b)
{
    return indices(a) < indices(b);
}

}  // namespace

std::vector<std::vector<int>> subgroup_classes(const CoxeterGroup& g, const std::vector<int>& subgroup)
{
    std::map<int, int> owner;
    std::vector<std::vector<int>> out;
    std::vector<int> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end());
    for (int w : sorted) {
        if (owner.count(w))
            continue;
        std::set<int> cls;
        for (int h : sorted)
            cls.insert(g.conjugate(h, w));
        for (int x : cls)
            owner[x] = static_cast<int>(out.size());
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

Arrangement::Arrangement(const CoxeterGroup& group) : group_(&group)
{
    const int n = group.num_positive_roots();
    if (n > 64)
        throw std::invalid_argument("too many reflections for the lattice representation");
    auto& index = index_;
    fix_of_.assign(static_cast<std::size_t>(group.size()), -1);
    for (int w = 0; w < group.size(); ++w) {
        auto basis = group.fix_basis(w);
        ReflectionSet key = 0;
        for (int r = 0; r < n; ++r) {
            bool contains = true;
            for (const auto& v : basis)
                if (!group.form(group.root(r), v).is_zero()) {
                    contains = false;
                    break;
                }
            if (contains)
                key |= ReflectionSet{1} << r;
        }
        auto it = index.find(key);
        if (it == index.end()) {
            LatticeElement x;
            x.reflections = key;
            x.codim = group.rank() - static_cast<int>(basis.size());
            x.basis = std::move(basis);
            it = index.emplace(key, static_cast<int>(lattice_.size())).first;
            lattice_.push_back(std::move(x));
        }
        fix_of_[w] = it->second;
    }

    // W-orbits via the simple generators.
    std::vector<std::vector<int>> orbits;
    std::vector<int> orbit_of(lattice_.size(), -1);
    for (std::size_t start = 0; start < lattice_.size(); ++start) {
        if (orbit_of[start] >= 0)
            continue;
        int o = static_cast<int>(orbits.size());
        std::vector<int> members{static_cast<int>(start)};
        orbit_of[start] = o;
        for (std::size_t q = 0; q < members.size(); ++q)
            for (int s = 0; s < group.rank(); ++s) {
                int y = find(translate(group.generator(s), lattice_[members[q]].reflections));
                if (y < 0)
                    throw std::logic_error("lattice not closed under W");
                if (orbit_of[y] < 0) {
                    orbit_of[y] = o;
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        orbits.push_back(std::move(members));
    }

    std::vector<std::vector<Subset>> s_lambda(orbits.size());
    for (Subset i = 0; i <= group.all_generators(); ++i) {
        int x = lattice_of_subset(i);
        if (x < 0)
            throw std::logic_error("X_I missing from the lattice");
        s_lambda[orbit_of[x]].push_back(i);
    }
    std::vector<Shape> shapes;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (s_lambda[o].empty())
            throw std::logic_error("orbit without a standard parabolic representative");
        Shape sh;
        sh.codim = lattice_[orbits[o][0]].codim;
        sh.members = orbits[o];
        sh.s_lambda = s_lambda[o];
        sh.canonical = *std::min_element(sh.s_lambda.begin(), sh.s_lambda.end(), lex_less);
        shapes.push_back(std::move(sh));
    }
    std::vector<int> order(shapes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (shapes[a].codim != shapes[b].codim)
            return shapes[a].codim < shapes[b].codim;
        return lex_less(shapes[a].canonical, shapes[b].canonical);
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
        Shape sh = std::move(shapes[order[k]]);
        sh.id = static_cast<int>(k);
        for (int x : sh.members)
            lattice_[x].shape = sh.id;
        shapes_.push_back(std::move(sh));
    }
    for (int w = 0; w < group.size(); ++w)
        ++shapes_[shape_of(w)].preimage_size;
    for (int c = 0; c < group.num_classes(); ++c)
        shapes_[shape_of(group.class_rep(c))].classes.push_back(c);
}

int Arrangement::find(ReflectionSet key) const
{
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

ReflectionSet Arrangement::parabolic_key(Subset i) const
{
    ReflectionSet key = 0;
    for (int r = 0; r < group_->num_positive_roots(); ++r)
        if (is_subset(group_->root_support(r), i))
            key |= ReflectionSet{1} << r;
    return key;
}

ReflectionSet Arrangement::translate(int w, ReflectionSet key) const
{
    const int n = group_->num_positive_roots();
    ReflectionSet out = 0;
    for (int r = 0; r < n; ++r)
        if (key >> r & 1)
            out |= ReflectionSet{1} << (group_->act_on_root(w, r) % n);
    return out;
}

std::vector<int> Arrangement::pointwise_stabilizer(int x) const
{
    std::vector<int> out;
    ReflectionSet key = lattice_[x].reflections;
    for (int w = 0; w < group_->size(); ++w)
        if ((lattice_[fix_of_[w]].reflections & ~key) == 0)
            out.push_back(w);
    return out;
}

std::vector<int> Arrangement::setwise_stabilizer(int x) const
{
    std::vector<int> out;
    ReflectionSet key = lattice_[x].reflections;
    for (int w = 0; w < group_->size(); ++w)
        if (translate(w, key) == key)
            out.push_back(w);
    return out;
}

CuspidalStructure Arrangement::cuspidal_structure(int shape_id) const
{
    const auto& g = *group_;
    const Shape& sh = shapes_[shape_id];
    CuspidalStructure cs;
    cs.shape = shape_id;
    cs.parabolic = sh.canonical;
    cs.classes = sh.classes;
    int x = lattice_of_subset(sh.canonical);
    auto wi = g.parabolic(sh.canonical);
    std::vector<int> cusp;
    for (int w : wi)
        if (fix_of_[w] == x)
            cusp.push_back(w);
    cs.normalizer_order = static_cast<int>(setwise_stabilizer(x).size());
    for (const auto& cls : subgroup_classes(g, wi)) {
        if (fix_of_[cls.front()] != x)
            continue;
        cs.cuspidal_classes.push_back(cls);
        cs.ambient_class.push_back(g.class_of(cls.front()));
    }
    // Bijection: each class of the shape meets W_I in exactly one cuspidal W_I-class.
    std::vector<int> seen = cs.ambient_class;
    std::sort(seen.begin(), seen.end());
    cs.bijection = seen == cs.classes;
    cs.counting = cs.bijection;
    int index = g.size() / cs.normalizer_order;
    for (std::size_t k = 0; k < cs.cuspidal_classes.size(); ++k) {
        // C ∩ W_I must be exactly this W_I-class.
        int c = cs.ambient_class[k];
        std::size_t meet = 0;
        for (int w : cusp)
            meet += g.class_of(w) == c;
        if (meet != cs.cuspidal_classes[k].size())
            cs.bijection = false;
        if (g.class_members(c).size() != static_cast<std::size_t>(index) * meet)
            cs.counting = false;
    }
    return cs;
}

CycloNumber Arrangement::alpha(int x, int n) const
{
    if (translate(n, lattice_[x].reflections) != lattice_[x].reflections)
        throw std::invalid_argument("element " + group_->word_string(n) + " does not normalize W_X");
    return group_->det_on_subspace(n, lattice_[x].basis);
}

}  // namespace coxwitness
