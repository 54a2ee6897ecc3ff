#include "wqm/words.hpp"

#include <algorithm>
#include <cctype>

namespace wqm {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > 26) {
    throw InputError("alphabet rank must be between 1 and 26, got " +
                     std::to_string(rank));
  }
}

char Alphabet::to_char(Letter l) const {
  if (!valid(l)) throw InputError("letter index out of range");
  const char base = is_positive(l) ? 'a' : 'A';
  return static_cast<char>(base + generator_index(l));
}

Letter Alphabet::from_char(char c) const {
  Letter l;
  if (c >= 'a' && c < 'a' + rank_) {
    l = static_cast<Letter>(2 * (c - 'a'));
  } else if (c >= 'A' && c < 'A' + rank_) {
    l = static_cast<Letter>(2 * (c - 'A') + 1);
  } else {
    throw InputError(std::string("unknown symbol '") + c + "' for rank " +
                     std::to_string(rank_));
  }
  return l;
}

ReducedWord ReducedWord::from_raw(std::span<const Letter> raw) {
  std::string out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && static_cast<Letter>(out.back()) == inverse_of(l)) {
      out.pop_back();
    } else {
      out.push_back(static_cast<char>(l));
    }
  }
  ReducedWord w;
  w.data_ = std::move(out);
  return w;
}

ReducedWord ReducedWord::from_reduced(std::string data) {
  ReducedWord w;
  w.data_ = std::move(data);
  return w;
}

bool ReducedWord::debug_is_reduced(std::string_view data) {
  for (std::size_t i = 1; i < data.size(); ++i) {
    if (static_cast<Letter>(data[i]) ==
        inverse_of(static_cast<Letter>(data[i - 1]))) {
      return false;
    }
  }
  return true;
}

ReducedWord ReducedWord::prefix(std::size_t n) const {
  return subword(0, n);
}

ReducedWord ReducedWord::subword(std::size_t pos, std::size_t n) const {
  ReducedWord w;
  w.data_ = data_.substr(pos, n);
  return w;
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
  std::size_t i = data_.size();
  std::size_t j = 0;
  while (i > 0 && j < rhs.data_.size() &&
         static_cast<Letter>(data_[i - 1]) ==
             inverse_of(static_cast<Letter>(rhs.data_[j]))) {
    --i;
    ++j;
  }
  ReducedWord w;
  w.data_.reserve(i + rhs.data_.size() - j);
  w.data_.append(data_, 0, i);
  w.data_.append(rhs.data_, j, std::string::npos);
  return w;
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.data_.reserve(data_.size());
  for (auto it = data_.rbegin(); it != data_.rend(); ++it) {
    w.data_.push_back(
        static_cast<char>(inverse_of(static_cast<Letter>(*it))));
  }
  return w;
}

ReducedWord ReducedWord::append(Letter l) const {
  ReducedWord w = *this;
  if (!w.data_.empty() && static_cast<Letter>(w.data_.back()) == inverse_of(l)) {
    w.data_.pop_back();
  } else {
    w.data_.push_back(static_cast<char>(l));
  }
  return w;
}

ReducedWord parse_word(const Alphabet& alpha, std::string_view text) {
  if (text.empty()) return {};
  if (text == "e" && alpha.rank() < ('e' - 'a' + 1)) return {};
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) raw.push_back(alpha.from_char(c));
  return ReducedWord::from_raw(raw);
}

std::string format_word(const Alphabet& alpha, const ReducedWord& w) {
  if (w.is_identity()) return "e";
  std::string out;
  out.reserve(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) out.push_back(alpha.to_char(w.letter(i)));
  return out;
}

std::vector<ReducedWord> ball(const Alphabet& alpha, int radius, int cap) {
  if (radius < 0) throw InputError("ball radius must be nonnegative");
  if (radius > cap) {
    throw ResourceError("ball radius " + std::to_string(radius) +
                        " exceeds the configured cap " + std::to_string(cap));
  }
  std::vector<ReducedWord> all;
  all.emplace_back();
  std::size_t layer_begin = 0;
  for (int n = 1; n <= radius; ++n) {
    const std::size_t layer_end = all.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const ReducedWord w = all[i];
      for (Letter l = 0; l < alpha.num_letters(); ++l) {
        if (!w.is_identity() && inverse_of(w.last()) == l) continue;
        all.push_back(w.append(l));
      }
    }
    layer_begin = layer_end;
  }
  return all;
}

std::vector<ReducedWord> sphere(const Alphabet& alpha, int n, int cap) {
  std::vector<ReducedWord> b = ball(alpha, n, cap);
  std::vector<ReducedWord> out;
  for (auto& w : b) {
    if (static_cast<int>(w.length()) == n) out.push_back(std::move(w));
  }
  return out;
}

std::size_t word_distance(const ReducedWord& x, const ReducedWord& y) {
  return (x.inverse() * y).length();
}

std::optional<Letter> edge_letter(const ReducedWord& x, const ReducedWord& y) {
  const ReducedWord step = x.inverse() * y;
  if (step.length() != 1) return std::nullopt;
  return step.letter(0);
}

}  // namespace wqm
