#pragma once

// Graded consonance and its Heyting pseudocomplement.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "contrapunctus/lattice.hpp"

namespace contrapunctus {

using Grade = boost::rational<std::int64_t>;

/// A function from a carrier to [0, 1], with exact rational grades.
class FuzzyConsonance {
 public:
  /// Throws PreconditionError if a grade lies outside [0, 1].
  explicit FuzzyConsonance(std::vector<Grade> grades);
  /// Crisp indicator of a subset.
  static FuzzyConsonance indicator(const SubSet& s);

  std::size_t size() const noexcept { return grades_.size(); }
  const std::vector<Grade>& grades() const noexcept { return grades_; }
  const Grade& operator[](std::size_t i) const { return grades_[i]; }

  /// Elements with grade 1, as a subset of `carrier`.
  SubSet support_of_one(const Carrier& carrier) const;

  friend bool operator==(const FuzzyConsonance&, const FuzzyConsonance&) = default;

 private:
  std::vector<Grade> grades_;
};

/// Pointwise: positive grade -> 0, zero grade -> 1.
FuzzyConsonance pseudocomplement(const FuzzyConsonance& k);

/// Every grade is 0 or 1.
bool is_crisp(const FuzzyConsonance& k);

/// Accepts "1/2", "0.25", "1" and "0".
Grade parse_grade(std::string_view text);
std::string format_grade(const Grade& g);
/// Comma-separated grades.
FuzzyConsonance parse_grades(std::string_view text);

}  // namespace contrapunctus
