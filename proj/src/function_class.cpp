#include "bvft/function_class.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace bvft {

FunctionClass::FunctionClass(std::vector<QTable> members_, std::vector<std::string> labels_,
                             double v_max_)
    : members(std::move(members_)), labels(std::move(labels_)), v_max(v_max_) {
    if (members.empty()) throw ShapeError("FunctionClass: empty class");
    if (labels.size() != members.size()) throw ShapeError("FunctionClass: label count mismatch");
    std::set<std::string> seen;
    for (const std::string& l : labels)
        if (!seen.insert(l).second) throw DataError("FunctionClass: duplicate label " + l);
    for (const QTable& m : members) {
        if (!m.same_shape(members.front())) throw ShapeError("FunctionClass: member shape mismatch");
        ensure_value_range(m, v_max, "FunctionClass");
    }
}

Partition::Partition(int s, int a, std::vector<int> groups)
    : num_states(s), num_actions(a), group_of(std::move(groups)) {
    if (group_of.size() != static_cast<std::size_t>(s) * a)
        throw ShapeError("Partition: group table size mismatch");
    int max_id = -1;
    for (int g : group_of) {
        if (g < 0) throw DataError("Partition: negative group id");
        max_id = std::max(max_id, g);
    }
    num_groups = max_id + 1;
    std::vector<bool> used(static_cast<std::size_t>(num_groups), false);
    for (int g : group_of) used[static_cast<std::size_t>(g)] = true;
    for (bool u : used)
        if (!u) throw DataError("Partition: group ids are not contiguous");
}

QTable discretize(const QTable& f, double eps_dct, double v_max) {
    if (!(eps_dct > 0.0 && eps_dct < v_max))
        throw ParameterError("discretize: eps_dct must lie in (0, v_max)");
    const long long k_count = static_cast<long long>(std::ceil(v_max / (2.0 * eps_dct)));
    QTable out(f.num_states, f.num_actions);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        long long k = static_cast<long long>(std::ceil(f.values[i] / (2.0 * eps_dct)));
        k = std::max<long long>(1, std::min(k, k_count));
        out.values[i] = (2.0 * static_cast<double>(k) - 1.0) * eps_dct;
    }
    return out;
}

Partition build_partition(const QTable& f_bar, const QTable& f_bar_prime) {
    if (!f_bar.same_shape(f_bar_prime)) throw ShapeError("build_partition: shape mismatch");
    std::map<std::pair<double, double>, int> ids;
    std::vector<int> groups(f_bar.values.size(), 0);
    int next_id = 0;
    for (std::size_t i = 0; i < f_bar.values.size(); ++i) {
        const std::pair<double, double> key{f_bar.values[i], f_bar_prime.values[i]};
        auto it = ids.find(key);
        if (it == ids.end()) it = ids.emplace(key, next_id++).first;
        groups[i] = it->second;
    }
    return Partition(f_bar.num_states, f_bar.num_actions, std::move(groups));
}

PiecewiseApprox best_piecewise_approx(const Partition& phi, const QTable& q) {
    if (phi.num_states != q.num_states || phi.num_actions != q.num_actions)
        throw ShapeError("best_piecewise_approx: shape mismatch");
    std::vector<double> lo(static_cast<std::size_t>(phi.num_groups),
                           std::numeric_limits<double>::infinity());
    std::vector<double> hi(static_cast<std::size_t>(phi.num_groups),
                           -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < q.values.size(); ++i) {
        const int g = phi.group_of[i];
        lo[g] = std::min(lo[g], q.values[i]);
        hi[g] = std::max(hi[g], q.values[i]);
    }
    PiecewiseApprox out;
    out.approx = QTable(q.num_states, q.num_actions);
    for (std::size_t i = 0; i < q.values.size(); ++i) {
        const int g = phi.group_of[i];
        out.approx.values[i] = 0.5 * (lo[g] + hi[g]);
    }
    for (int g = 0; g < phi.num_groups; ++g) out.error = std::max(out.error, 0.5 * (hi[g] - lo[g]));
    return out;
}

BestMember best_member_error(const FunctionClass& f_class, const QTable& q_star) {
    BestMember best;
    best.error = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f_class.size(); ++i) {
        const double d = inf_distance(f_class.members[i], q_star);
        if (d < best.error) {
            best.error = d;
            best.index = static_cast<int>(i);
        }
    }
    return best;
}

}  // namespace bvft
