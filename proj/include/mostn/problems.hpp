#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mostn/core.hpp"

namespace mostn {

/// CEC-2009 unconstrained multiobjective test problems.
enum class ProblemId { UF1 = 1, UF2, UF3, UF4, UF5, UF6, UF7, UF8, UF9, UF10 };

inline constexpr int kDefaultDimension = 10;

struct ProblemSpec {
    ProblemId id = ProblemId::UF1;
    int dimension = kDefaultDimension;
    int objectives = 2;
    std::vector<double> lower;
    std::vector<double> upper;

    std::string name() const;
};

/// Thrown by `evaluate` for a coordinate outside the box.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, std::size_t index)
        : std::domain_error(what), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

ProblemSpec make_problem(ProblemId id);
ProblemId parse_problem_id(std::string_view name);
std::vector<ProblemId> all_problems();

ObjectiveVector evaluate(const ProblemSpec& spec, std::span<const double> x);

using ReferenceFront = std::vector<ObjectiveVector>;

/// `k` deterministic points on the analytic Pareto front. UF5 has a discrete
/// front of 21 points, so it returns min(k, 21) points.
ReferenceFront sample_pareto_front(const ProblemSpec& spec, std::size_t k);

inline constexpr std::size_t kReferenceFrontSize = 1000;

}  // namespace mostn
