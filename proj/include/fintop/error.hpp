#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

enum class ErrorCode {
  invalid_input,
  not_closed_under_union,
  not_closed_under_intersection,
  missing_empty_or_full,
  not_continuous,
  shape_mismatch,
  cap_exceeded,
  not_open,
  not_algebra,
  precondition_failed,
  not_a_frame,
  invalid_category,
  not_idempotent,
  not_a_split_pair,
  alpha_not_preserved,
  theorem_violation,
};

std::string_view to_string(ErrorCode code);

/// Every failure carries a code, a human readable message with labels
/// resolved, and the raw witness sets (opens, point sets) in the order the
/// operation documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<PointSet> witness = {},
        std::vector<std::size_t> indices = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)),
        indices_(std::move(indices)) {}

  ErrorCode code() const { return code_; }
  const std::vector<PointSet>& witness() const { return witness_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<PointSet> witness_;
  std::vector<std::size_t> indices_;
};

}  // namespace fintop
