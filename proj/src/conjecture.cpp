#include "coxwitness/conjecture.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "coxwitness/parallel.hpp"

namespace coxwitness {

namespace {

std::string key_of(const ClassFunction& a, const ClassFunction& b, int order)
{
    std::ostringstream os;
    for (const auto* f : {&a, &b}) {
        for (const auto& v : f->values()) {
            for (const auto& r : v.coeffs_in(order))
                os << r.to_string() << ',';
            os << ';';
        }
        os << '|';
    }
    return os.str();
}

int order_of(const ClassFunction& f)
{
    int m = 1;
    for (const auto& v : f.values())
        m = std::lcm(m, v.order());
    return m;
}

}  // namespace

std::vector<ClassFunction> shape_ideal_characters(const DescentAlgebra& da, const Sigma& sigma)
{
    auto sol = da.solve(sigma);
    std::vector<ClassFunction> out(da.shape_classes().size());
    parallel_for(out.size(), [&](std::size_t l) {
        out[l] = ideal_character(da.to_group_algebra(da.e_lambda(sol, static_cast<int>(l))));
    });
    return out;
}

ShapeSearch search_shape(const Arrangement& arr, const ClassFunction& char_e, const ClassFunction& char_a,
                         int shape, bool first_only)
{
    const auto& g = arr.group();
    auto sign = ClassFunction::sign(g);
    ShapeSearch s;
    s.shape = shape;
    s.char_e = char_e;
    s.char_a = char_a;
    for (int c : arr.shape(shape).classes)
        s.reps.push_back(g.class_rep(c));

    const std::size_t nreps = s.reps.size();
    std::vector<std::vector<std::pair<ClassFunction, ClassFunction>>> induced(nreps);
    int order = std::lcm(order_of(char_e), order_of(char_a));
    for (std::size_t i = 0; i < nreps; ++i) {
        int c = s.reps[i];
        auto z = g.centralizer(c);
        s.candidates.push_back(linear_characters(g, z));
        std::vector<CycloNumber> twist(static_cast<std::size_t>(g.size()));
        for (int y : z)
            twist[y] = sign(y) * arr.alpha_c(c, y);
        for (const auto& phi : s.candidates.back()) {
            auto ind_e = induce(g, phi);
            auto ind_a = induce(g, z, [&](int y) { return twist[y] * phi(y); });
            order = std::lcm(order, std::lcm(order_of(ind_e), order_of(ind_a)));
            induced[i].emplace_back(std::move(ind_e), std::move(ind_a));
        }
    }

    // Candidates with equal induced pairs are interchangeable; search over distinct pairs.
    std::vector<std::vector<std::vector<int>>> groups(nreps);
    std::vector<std::vector<int>> group_rep(nreps);
    std::map<std::string, int> last_index;
    for (std::size_t i = 0; i < nreps; ++i) {
        std::map<std::string, int> seen;
        for (std::size_t k = 0; k < induced[i].size(); ++k) {
            auto key = key_of(induced[i][k].first, induced[i][k].second, order);
            auto [it, inserted] = seen.emplace(key, static_cast<int>(groups[i].size()));
            if (inserted) {
                groups[i].emplace_back();
                group_rep[i].push_back(static_cast<int>(k));
                if (i + 1 == nreps)
                    last_index[key] = it->second;
            }
            groups[i][it->second].push_back(static_cast<int>(k));
        }
    }

    // Depth-first over all but the last representative; the last is found by lookup.
    std::vector<int> chosen(nreps, 0);
    bool stop = false;
    auto emit = [&]() {
        // expand the chosen groups into concrete character tuples
        std::vector<std::size_t> pos(nreps, 0);
        for (;;) {
            std::vector<int> tuple(nreps);
            for (std::size_t i = 0; i < nreps; ++i)
                tuple[i] = groups[i][chosen[i]][pos[i]];
            s.solutions.push_back(std::move(tuple));
            if (first_only) {
                stop = true;
                return;
            }
            bool advanced = false;
            for (std::size_t i = nreps; i-- > 0;) {
                if (++pos[i] < groups[i][chosen[i]].size()) {
                    advanced = true;
                    break;
                }
                pos[i] = 0;
            }
            if (!advanced)
                return;
        }
    };
    std::function<void(std::size_t, const ClassFunction&, const ClassFunction&)> dfs =
        [&](std::size_t depth, const ClassFunction& pe, const ClassFunction& pa) {
            if (stop)
                return;
            if (depth + 1 == nreps) {
                auto it = last_index.find(key_of(char_e - pe, char_a - pa, order));
                if (it != last_index.end()) {
                    chosen[depth] = it->second;
                    emit();
                }
                return;
            }
            for (std::size_t k = 0; k < groups[depth].size() && !stop; ++k) {
                chosen[depth] = static_cast<int>(k);
                const auto& p = induced[depth][group_rep[depth][k]];
                dfs(depth + 1, pe + p.first, pa + p.second);
            }
        };
    ClassFunction zero(g);
    if (nreps > 0)
        dfs(0, zero, zero);

    s.residual_e = char_e;
    s.residual_a = char_a;
    for (std::size_t i = 0; i < nreps; ++i) {
        s.residual_e -= induced[i][0].first;
        s.residual_a -= induced[i][0].second;
    }
    return s;
}

bool ConjectureReport::verified() const
{
    for (const auto& s : shapes)
        if (!s.verified())
            return false;
    return true;
}

Json ConjectureReport::to_json(const CoxeterGroup& g) const
{
    Json arr = Json::array();
    for (const auto& s : shapes) {
        Json reps = Json::array();
        for (int c : s.reps)
            reps.push_back(g.word_string(c));
        Json sols = Json::array();
        for (const auto& tuple : s.solutions) {
            Json t = Json::array();
            for (std::size_t i = 0; i < tuple.size(); ++i)
                t.push_back(s.candidates[i][tuple[i]].describe(g));
            sols.push_back(std::move(t));
        }
        Json j{{"shape", s.shape},
               {"classes", reps},
               {"solutions", sols},
               {"solution_count", s.solutions.size()},
               {"char_E", coxwitness::to_json(s.char_e)},
               {"char_A", coxwitness::to_json(s.char_a)},
               {"status", s.verified() ? "verified" : "failed"}};
        if (!s.verified()) {
            j["residual_E"] = coxwitness::to_json(s.residual_e);
            j["residual_A"] = coxwitness::to_json(s.residual_a);
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

ConjectureReport verify_conjecture(const GroupContext& ctx, bool first_only)
{
    ConjectureReport rep;
    rep.shapes.resize(ctx.arrangement().shapes().size());
    parallel_for(rep.shapes.size(), [&](std::size_t l) {
        rep.shapes[l] = search_shape(ctx.arrangement(), ctx.char_e()[l], ctx.char_a()[l], static_cast<int>(l),
                                     first_only);
    });
    return rep;
}

ConjectureReport verify_conjecture(const CoxeterGroup& g, const ConjectureOptions& opts)
{
    GroupContext ctx(g, opts.sigma);
    return verify_conjecture(ctx, opts.first_only);
}

}  // namespace coxwitness
