#include "povs/measure.hpp"

#include "povs/errors.hpp"

namespace povs {

MeasureValue measure(const Formula& f, Variable v, const Assignment& sigma) {
    if (!v.is_home())
        throw ArityError("measure variable " + v.str() + " must be home-sorted");
    UnarySet s = unary_set(f, v, sigma).intersect(UnarySet::above(ModelElement(0))).intersect(UnarySet::below(ModelElement(1)));
    ModelElement total(0);
    for (const auto& piece : s.decomposition().pieces)
        if (piece.is_large())
            total = total + (piece.b.value - piece.a.value);
    return {total};
}

int bucket_index(const ModelElement& mu, int k) {
    if (k < 1)
        throw PreconditionError("bucket count must be positive");
    // Smallest j with mu <= j/k.
    ModelElement scaled = mu * Rational(k);
    mpz_class j = ceil(scaled);
    if (j < 1)
        return 1;
    if (j > k)
        return k;
    return static_cast<int>(j.get_si());
}

ModelElement BucketReport::max_within_bucket_gap() const {
    ModelElement gap(0);
    for (std::size_t i = 0; i < assignments.size(); ++i)
        for (std::size_t j = i + 1; j < assignments.size(); ++j) {
            if (assignments[i].bucket != assignments[j].bucket)
                continue;
            ModelElement d = assignments[i].mu - assignments[j].mu;
            if (d.sign() < 0)
                d = -d;
            if (less(gap, d))
                gap = d;
        }
    return gap;
}

BucketReport bucket_partition(const Formula& f, Variable v, const std::vector<Assignment>& params, int k) {
    if (k < 1)
        throw PreconditionError("bucket count must be positive");
    BucketReport report;
    report.k = k;
    for (const auto& sigma : params) {
        ModelElement mu = measure(f, v, sigma).value;
        report.assignments.push_back({sigma, bucket_index(mu, k), mu});
    }
    return report;
}

} // namespace povs
