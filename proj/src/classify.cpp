#include "cycinv/classify.hpp"

namespace cycinv {

std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Veronese: return "Veronese";
        case ClassKind::ThreeGenerators: return "ThreeGenerators";
        case ClassKind::Codim2: return "Codim2";
        case ClassKind::FiveGen2p1Lower: return "FiveGen2p1Lower";
        case ClassKind::FiveGen2p1Upper: return "FiveGen2p1Upper";
        case ClassKind::TwoSlope: return "TwoSlope";
        case ClassKind::General: return "General";
    }
    throw std::logic_error("to_string(ClassKind): unknown kind");
}

DivisionData division_data(long long p, long long b) {
    long long binv = mod_inverse(b, p);
    return {p / b, p % b, p / binv, p % binv};
}

long long product_invariant(long long p, long long b) {
    return (p - b) * (p - mod_inverse(b, p));
}

Classification classify(const Action& act) {
    Classification cls;
    cls.action = normalize(act);
    long long p = cls.action.p, b = cls.action.b, binv = cls.action.b_inv;
    cls.inv = invariant_generators(p, b);
    cls.product = product_invariant(p, b);
    if (cls.product % p != 1)
        throw TheoremViolation("classify: (p-b)(p-b_inv) is not 1 mod p");
    cls.k = (cls.product - 1) / p;
    cls.div = division_data(p, b);
    cls.slope_set = slopes(cls.inv);

    const std::size_t n = cls.inv.size();
    if (b == 1) {
        cls.kind = ClassKind::Veronese;
        if (n != (std::size_t)p + 1)
            throw TheoremViolation("classify: Veronese action without p+1 generators");
    } else if (b == p - 1) {
        cls.kind = ClassKind::ThreeGenerators;
        if (n != 3)
            throw TheoremViolation("classify: b = p-1 without exactly 3 generators");
    } else if (cls.product == p + 1) {
        cls.kind = ClassKind::Codim2;
        if (n != 4)
            throw TheoremViolation("classify: product p+1 without exactly 4 generators");
    } else if (cls.product == 2 * p + 1) {
        if (n != 5)
            throw TheoremViolation("classify: product 2p+1 without exactly 5 generators");
        if (2 * b < p - 1) {
            cls.kind = ClassKind::FiveGen2p1Lower;
            if (3 * b != p - 1)
                throw TheoremViolation("classify: lower 2p+1 branch with b != (p-1)/3");
        } else {
            cls.kind = ClassKind::FiveGen2p1Upper;
            if ((p - b) % 2 == 0 || (p - binv) % 2 == 0)
                throw TheoremViolation("classify: upper 2p+1 branch with even p-b or p-b_inv");
        }
    } else if (cls.div.r == cls.div.s && cls.div.q == cls.div.t) {
        cls.kind = ClassKind::TwoSlope;
    } else {
        cls.kind = ClassKind::General;
    }

    // Slope-count law: for b > 1, exactly two distinct slopes iff r = s and
    // q = t.  (b = 1 degenerates: the condition holds but all slopes are -1.)
    if (b > 1) {
        bool cond = cls.div.r == cls.div.s && cls.div.q == cls.div.t;
        if (cond != (cls.slope_set.size() == 2))
            throw TheoremViolation("classify: slope-count law violated");
    } else if (cls.slope_set.size() != 1) {
        throw TheoremViolation("classify: b = 1 staircase with more than one slope");
    }

    if (n == 4 && cls.product != p + 1)
        throw TheoremViolation("classify: 4 generators without product p+1");
    return cls;
}

Classification classify(long long p, long long b) { return classify(Action(p, 1, b)); }

} // namespace cycinv
