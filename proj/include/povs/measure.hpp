#pragma once

#include <vector>

#include "povs/decomposition.hpp"

namespace povs {

// Exact value of the length measure in [0, 1]. Small sets get 0 and
// intervals their length, with everything clipped to (0, 1).
struct MeasureValue {
    ModelElement value;
};

MeasureValue measure(const Formula& f, Variable v, const Assignment& sigma = {});

// Bucket j covers [(j-1)/k, j/k]; a value sitting exactly on (j-1)/k goes to
// bucket j-1.
int bucket_index(const ModelElement& mu, int k);

struct BucketEntry {
    Assignment params;
    int bucket = 1;
    ModelElement mu;
};

struct BucketReport {
    int k = 1;
    std::vector<BucketEntry> assignments;

    // Largest gap between two measures sharing a bucket (0 when no bucket
    // holds two entries).
    ModelElement max_within_bucket_gap() const;
};

BucketReport bucket_partition(const Formula& f, Variable v, const std::vector<Assignment>& params, int k);

} // namespace povs
