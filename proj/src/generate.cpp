#include "flagdress/generate.hpp"

#include "flagdress/errors.hpp"
#include "flagdress/realization.hpp"

#include <algorithm>

namespace flagdress {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void check_request(int n, const std::vector<int>& dims, int lo, int hi) {
    if (dims.empty()) throw DomainError("no layer dims given");
    if (lo > hi) throw DomainError("empty weight range");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dims[i] > n - 1)
            throw DomainError("layer dim " + std::to_string(dims[i]) + " outside 1.." + std::to_string(n - 1));
        if (i > 0 && dims[i] <= dims[i - 1]) throw DomainError("layer dims must increase strictly");
    }
}

FlagInstance tropical_minor_sample(int n, const std::vector<int>& dims, std::mt19937_64& rng, int lo, int hi) {
    if (hi - lo < dims.back()) throw DomainError("weight range too narrow for tropical minors");
    QMatrix entries(dims.back(), n);
    for (Eigen::Index r = 0; r < entries.rows(); ++r)
        for (Eigen::Index c = 0; c < entries.cols(); ++c) entries(r, c) = Rational(uniform_int(rng, 0, 1));
    FlagInstance flag = tropical_minor_flag(entries, dims);
    for (auto& layer : flag.layers) {
        const auto [mn, mx] = std::minmax_element(layer.weights().begin(), layer.weights().end());
        const int shift = uniform_int(rng, lo - static_cast<int>(mn->to_double()), hi - static_cast<int>(mx->to_double()));
        for (const Subset& s : layer.subsets()) layer[s] += Rational(shift);
    }
    return flag;
}

} // namespace

std::string_view to_string(WeightFamily f) {
    switch (f) {
    case WeightFamily::uniform: return "uniform";
    case WeightFamily::tropical_minor: return "tropical-minor";
    case WeightFamily::perturbed: return "perturbed";
    }
    return "?";
}

FlagInstance sample_instance(int n, const std::vector<int>& dims, WeightFamily family, std::mt19937_64& rng, int lo,
                             int hi) {
    check_request(n, dims, lo, hi);
    if (family == WeightFamily::uniform) {
        FlagInstance flag;
        flag.n = n;
        for (int d : dims) {
            std::vector<Rational> w(binomial(n, d));
            for (auto& x : w) x = Rational(uniform_int(rng, lo, hi));
            flag.layers.emplace_back(n, d, std::move(w));
        }
        return flag;
    }
    FlagInstance flag = tropical_minor_sample(n, dims, rng, lo, hi);
    if (family == WeightFamily::perturbed) {
        auto& layer = flag.layers[uniform_int(rng, 0, static_cast<int>(flag.layers.size()) - 1)];
        const auto& subsets = layer.subsets();
        const Subset& s = subsets[uniform_int(rng, 0, static_cast<int>(subsets.size()) - 1)];
        int step = uniform_int(rng, 0, 1) ? 1 : -1;
        const Rational moved = layer[s] + Rational(step);
        if (moved < Rational(lo) || moved > Rational(hi)) step = -step;
        layer[s] += Rational(step);
    }
    return flag;
}

FlagInstance uniform_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int lo, int hi) {
    std::mt19937_64 rng(seed);
    return sample_instance(n, dims, WeightFamily::uniform, rng, lo, hi);
}

FlagInstance mixed_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int lo, int hi) {
    std::mt19937_64 rng(seed);
    const auto family = static_cast<WeightFamily>(uniform_int(rng, 0, 2));
    return sample_instance(n, dims, family, rng, lo, hi);
}

FlagInstance valid_instance(int n, const std::vector<int>& dims, std::uint64_t seed, int budget, int* attempts, int lo,
                            int hi) {
    std::mt19937_64 rng(seed);
    for (int k = 1; k <= budget; ++k) {
        const auto family = static_cast<WeightFamily>(uniform_int(rng, 0, 2));
        FlagInstance flag = sample_instance(n, dims, family, rng, lo, hi);
        if (check_flag(flag).valid()) {
            if (attempts) *attempts = k;
            return flag;
        }
    }
    throw GenerationError("no valid instance within " + std::to_string(budget) + " draws (seed " +
                          std::to_string(seed) + ")");
}

FlagInstance realizable_instance(int n, const std::vector<int>& dims, std::uint64_t seed) {
    return tropicalize_flag(random_flag_matrix(n, dims, seed));
}

} // namespace flagdress
