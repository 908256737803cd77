#include "cbsg/surgery.hpp"

#include <algorithm>

namespace cbsg {

GenSet replace_ray_gens(const GenSet& F, const RaySurgerySpec& spec)
{
    const IntVec2 g1 = spec.g1;
    if (!F.contains(g1))
        throw PreconditionError("ray generator " + to_string(g1) + " is not among the generators");
    if (cross(g1, spec.ray) != 0)
        throw PreconditionError("ray generator is not on the ray");
    if (spec.s_list.empty())
        throw PreconditionError("empty replacement list");

    std::int64_t lambda_t = 0;
    for (IntVec2 s : spec.s_list) {
        if (cross(s, g1) != 0)
            throw PreconditionError(to_string(s) + " is not a multiple of " + to_string(g1));
        std::int64_t lam = g1.x != 0 ? s.x / g1.x : s.y / g1.y;
        if (lam < 1 || lam * g1.x != s.x || lam * g1.y != s.y)
            throw PreconditionError(to_string(s) + " is not a positive multiple of " + to_string(g1));
        lambda_t = std::max(lambda_t, lam);
    }

    std::vector<IntVec2> B = spec.s_list;
    for (IntVec2 g : F.points) {
        if (g == g1)
            continue;
        B.push_back(g);
        for (std::int64_t j = 1; j < lambda_t; ++j)
            B.push_back(g + j * g1);
    }
    return minimalize(B);
}

GenSet remove_element(const GenSet& F, IntVec2 a)
{
    if (!F.contains(a))
        throw PreconditionError("not a minimal generator, removal is not a semigroup: " + to_string(a));
    std::vector<IntVec2> B{2 * a, 3 * a};
    for (IntVec2 f : F.points) {
        if (f == a)
            continue;
        B.push_back(f);
        B.push_back(f + a);
    }
    return minimalize(B);
}

GenSet remove_finite_set(const GenSet& F, std::vector<IntVec2> A)
{
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());
    GenSet cur = F.minimal ? F : minimalize(F.points);
    while (!A.empty()) {
        auto it = std::find_if(A.begin(), A.end(), [&](IntVec2 a) { return cur.contains(a); });
        if (it == A.end())
            throw PreconditionError("A is not removable (the complement is not a semigroup)");
        cur = remove_element(cur, *it);
        A.erase(it);
    }
    return cur;
}

Int generator_norm_bound(const BoundInputs& b)
{
    if (b.M < 1 || b.k < 1 || b.l < 0)
        throw PreconditionError("bound inputs out of range");
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(b.l));
    return p * (2 * b.k - 1) * b.M;
}

} // namespace cbsg
