#include "contrapunctus/fuzzy.hpp"

#include <algorithm>
#include <charconv>

#include "contrapunctus/errors.hpp"

namespace contrapunctus {

namespace {

std::int64_t parse_digits(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end || v < 0) {
    throw ParseError("expected a grade such as 1/2 or 0.25", std::string(whole));
  }
  return v;
}

}  // namespace

FuzzyConsonance::FuzzyConsonance(std::vector<Grade> grades) : grades_(std::move(grades)) {
  for (const auto& g : grades_) {
    if (g < Grade(0) || g > Grade(1)) {
      throw PreconditionError("grade " + format_grade(g) + " outside [0, 1]");
    }
  }
}

FuzzyConsonance FuzzyConsonance::indicator(const SubSet& s) {
  std::vector<Grade> g(s.carrier().size(), Grade(0));
  for (auto x : s.elements()) g[x] = Grade(1);
  return FuzzyConsonance(std::move(g));
}

SubSet FuzzyConsonance::support_of_one(const Carrier& carrier) const {
  if (carrier.size() != grades_.size()) throw IncompatibleObjects("grading of another carrier");
  SubSet s(carrier);
  for (std::uint32_t x = 0; x < grades_.size(); ++x) {
    if (grades_[x] == Grade(1)) s.insert(x);
  }
  return s;
}

FuzzyConsonance pseudocomplement(const FuzzyConsonance& k) {
  std::vector<Grade> out;
  out.reserve(k.size());
  for (const auto& g : k.grades()) out.emplace_back(g > Grade(0) ? 0 : 1);
  return FuzzyConsonance(std::move(out));
}

bool is_crisp(const FuzzyConsonance& k) {
  return std::all_of(k.grades().begin(), k.grades().end(),
                     [](const Grade& g) { return g == Grade(0) || g == Grade(1); });
}

Grade parse_grade(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_digits(text.substr(0, slash), text);
    const auto den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator", std::string(text));
    return {num, den};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 15) throw ParseError("too many decimal places", std::string(text));
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_digits(whole, text);
    const std::int64_t f = frac.empty() ? 0 : parse_digits(frac, text);
    return Grade(w) + Grade(f, den);
  }
  return Grade(parse_digits(text, text));
}

std::string format_grade(const Grade& g) {
  if (g.denominator() == 1) return std::to_string(g.numerator());
  return std::to_string(g.numerator()) + "/" + std::to_string(g.denominator());
}

FuzzyConsonance parse_grades(std::string_view text) {
  std::vector<Grade> grades;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    auto token = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    grades.push_back(parse_grade(token));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return FuzzyConsonance(std::move(grades));
}

}  // namespace contrapunctus
