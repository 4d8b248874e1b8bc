#include "nsg/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace nsg {

namespace {

void require_same_parent(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!same_parent(a, b)) {
    throw Error(ErrorCode::ParentMismatch,
                "ideals over " + a.parent().to_string() + " and " + b.parent().to_string());
  }
}

}  // namespace

bool same_parent(const RelativeIdeal& a, const RelativeIdeal& b) {
  return a.parent_ptr() == b.parent_ptr() || a.parent() == b.parent();
}

bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
  return same_parent(a, b) && a.min_ == b.min_ && a.threshold_ == b.threshold_ && a.window_ == b.window_;
}

RelativeIdeal RelativeIdeal::normalize(SemigroupPtr parent, int lo, const Bits& raw) {
  const int hi = lo + static_cast<int>(raw.size());
  const auto first = raw.find_first();
  const int min = first == Bits::npos ? hi : lo + static_cast<int>(first);
  // Last non-member at or above min fixes the threshold.
  int threshold = min;
  for (int z = hi - 1; z >= min; --z) {
    if (!raw[static_cast<std::size_t>(z - lo)]) {
      threshold = z + 1;
      break;
    }
  }
  Bits window(static_cast<std::size_t>(threshold - min));
  for (int z = min; z < threshold; ++z) {
    if (raw[static_cast<std::size_t>(z - lo)]) window.set(static_cast<std::size_t>(z - min));
  }
  return RelativeIdeal(std::move(parent), min, threshold, std::move(window));
}

RelativeIdeal::Bits RelativeIdeal::membership(int lo, int hi) const {
  Bits out(static_cast<std::size_t>(std::max(0, hi - lo)));
  const int copy_lo = std::max(lo, min_);
  const int copy_hi = std::min(hi, threshold_);
  for (int z = copy_lo; z < copy_hi; ++z) {
    if (window_[static_cast<std::size_t>(z - min_)]) out.set(static_cast<std::size_t>(z - lo));
  }
  for (int z = std::max(lo, threshold_); z < hi; ++z) out.set(static_cast<std::size_t>(z - lo));
  return out;
}

std::vector<int> RelativeIdeal::small_elements() const {
  std::vector<int> out;
  for (auto i = window_.find_first(); i != Bits::npos; i = window_.find_next(i)) {
    out.push_back(min_ + static_cast<int>(i));
  }
  return out;
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int z : small_elements()) {
    os << (first ? "" : ", ") << z;
    first = false;
  }
  os << (first ? "" : ", ") << threshold_ << " ->}";
  return os.str();
}

RelativeIdeal ideal_from_generators(SemigroupPtr s, std::span<const int> xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyGenerators, "ideal generator list is empty");
  const int lo = *std::min_element(xs.begin(), xs.end());
  const int hi = lo + s->conductor();  // lo + S already covers [lo + c, inf)
  RelativeIdeal::Bits raw(static_cast<std::size_t>(hi - lo));
  for (int x : xs) {
    for (int z = x; z < hi; ++z) {
      if (s->contains(z - x)) raw.set(static_cast<std::size_t>(z - lo));
    }
  }
  return RelativeIdeal::normalize(std::move(s), lo, raw);
}

RelativeIdeal principal_ideal(SemigroupPtr s, int x) {
  const int xs[] = {x};
  return ideal_from_generators(std::move(s), xs);
}

RelativeIdeal semigroup_ideal(SemigroupPtr s) { return principal_ideal(std::move(s), 0); }

RelativeIdeal maximal_ideal(SemigroupPtr s) {
  const int hi = std::max(s->conductor(), 1);
  RelativeIdeal::Bits raw(static_cast<std::size_t>(hi));
  for (int z = 1; z < hi; ++z) {
    if (s->contains(z)) raw.set(static_cast<std::size_t>(z));
  }
  return RelativeIdeal::normalize(std::move(s), 0, raw);
}

RelativeIdeal canonical_ideal(SemigroupPtr s) {
  // Gaps a in [1, F] give F - a in [0, F - 1]; negative a give everything past F.
  const int f = s->frobenius();
  const int hi = f + 1;
  RelativeIdeal::Bits raw(static_cast<std::size_t>(std::max(hi, 0)));
  for (int z = 0; z < hi; ++z) {
    if (!s->contains(f - z)) raw.set(static_cast<std::size_t>(z));
  }
  return RelativeIdeal::normalize(std::move(s), 0, raw);
}

RelativeIdeal conductor_ideal(SemigroupPtr s) {
  const int c = s->conductor();
  return RelativeIdeal::normalize(std::move(s), c, RelativeIdeal::Bits());
}

RelativeIdeal naturals_ideal(SemigroupPtr s) {
  return RelativeIdeal::normalize(std::move(s), 0, RelativeIdeal::Bits());
}

RelativeIdeal translate(const RelativeIdeal& i, int z) {
  return RelativeIdeal::normalize(i.parent_ptr(), i.min_element() + z,
                                  i.membership(i.min_element(), i.threshold()));
}

RelativeIdeal add(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_parent(i, j);
  // Loop over the narrower window; the other operand is used whole.
  const RelativeIdeal& a = (i.window().size() <= j.window().size()) ? i : j;
  const RelativeIdeal& b = (&a == &i) ? j : i;
  const int lo = a.min_element() + b.min_element();
  // Past min(b) + threshold(a) everything is b's minimum plus a tail element of a.
  const int hi = std::min(b.min_element() + a.threshold(), a.min_element() + b.threshold());
  RelativeIdeal::Bits raw(static_cast<std::size_t>(hi - lo));
  for (int x = a.min_element(); x < a.threshold(); ++x) {
    if (!a.contains(x)) continue;
    raw |= b.membership(lo - x, hi - x);
  }
  return RelativeIdeal::normalize(i.parent_ptr(), lo, raw);
}

RelativeIdeal intersect(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_parent(i, j);
  const int lo = std::max(i.min_element(), j.min_element());
  const int hi = std::max({i.threshold(), j.threshold(), lo});
  auto raw = i.membership(lo, hi);
  raw &= j.membership(lo, hi);
  return RelativeIdeal::normalize(i.parent_ptr(), lo, raw);
}

RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_parent(i, j);
  // z + min(J) must reach I, and z + [threshold(J), inf) must lie in I's tail.
  const int lo = std::max(i.min_element() - j.min_element(), i.threshold() - j.threshold());
  // From threshold(I) - min(J) on, z + J sits entirely in I's tail.
  const int hi = std::max(lo, i.threshold() - j.min_element());
  const int width = hi - lo;
  RelativeIdeal::Bits result(static_cast<std::size_t>(width));
  result.set();
  if (width > 0) {
    const int span = j.threshold() - j.min_element();
    const auto ext = i.membership(lo + j.min_element(), hi + j.threshold());
    for (int d = 0; d < span; ++d) {
      if (!j.window()[static_cast<std::size_t>(d)]) continue;
      auto shifted = ext >> static_cast<std::size_t>(d);
      shifted.resize(static_cast<std::size_t>(width));
      result &= shifted;
    }
  }
  return RelativeIdeal::normalize(i.parent_ptr(), lo, result);
}

bool contains_ideal(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_parent(i, j);
  if (j.min_element() < i.min_element()) return false;
  const int lo = j.min_element();
  const int hi = std::max({i.threshold(), j.threshold(), lo});
  auto outside = j.membership(lo, hi);
  outside -= i.membership(lo, hi);
  return outside.none();
}

std::int64_t length_between(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_parent(i, j);
  const int lo = std::min(i.min_element(), j.min_element());
  const int hi = std::max({i.threshold(), j.threshold(), lo});
  auto jb = j.membership(lo, hi);
  const auto ib = i.membership(lo, hi);
  auto outside = jb - ib;
  if (auto w = outside.find_first(); w != RelativeIdeal::Bits::npos) {
    throw Error(ErrorCode::NotContained,
                "element " + std::to_string(lo + static_cast<int>(w)) + " of the smaller ideal is missing");
  }
  auto diff = ib - jb;
  return static_cast<std::int64_t>(diff.count());
}

namespace {

class ExpressionParser {
 public:
  ExpressionParser(SemigroupPtr s, std::string_view text) : s_(std::move(s)), text_(text) {}

  RelativeIdeal parse() {
    auto result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  RelativeIdeal expr() {
    auto lhs = term();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) return lhs;
      const char op = text_[pos_];
      if (op != '+' && op != '-' && op != '&') return lhs;
      ++pos_;
      auto rhs = term();
      if (op == '+') lhs = add(lhs, rhs);
      else if (op == '-') lhs = difference(lhs, rhs);
      else lhs = intersect(lhs, rhs);
    }
  }

  RelativeIdeal term() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an ideal");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      auto inner = expr();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      return principal_ideal(s_, integer());
    }
    std::size_t end = pos_;
    while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
    const auto word = text_.substr(pos_, end - pos_);
    pos_ = end;
    if (word == "omega") return canonical_ideal(s_);
    if (word == "M") return maximal_ideal(s_);
    if (word == "C") return conductor_ideal(s_);
    if (word == "S") return semigroup_ideal(s_);
    if (word == "N") return naturals_ideal(s_);
    if (word == "gens") {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':' after gens");
      ++pos_;
      std::vector<int> xs{integer()};
      for (;;) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ',') break;
        ++pos_;
        xs.push_back(integer());
      }
      return ideal_from_generators(s_, xs);
    }
    fail("unknown ideal name '" + std::string(word) + "'");
  }

  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

  SemigroupPtr s_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RelativeIdeal evaluate_ideal_expression(SemigroupPtr s, std::string_view expr) {
  return ExpressionParser(std::move(s), expr).parse();
}

}  // namespace nsg
