#include "lieconc/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lieconc {

int min_n(SeriesTag tag) { return tag == SeriesTag::D ? 4 : 2; }

Series make_series(SeriesTag tag, int n) {
  if (n < min_n(tag)) {
    throw std::invalid_argument(std::string("series ") + tag_letter(tag) + " requires n >= " +
                                std::to_string(min_n(tag)) + ", got " + std::to_string(n));
  }
  return Series{tag, n};
}

SeriesTag parse_series_tag(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "a" || s == "su") return SeriesTag::A;
  if (s == "b" || s == "spin-odd") return SeriesTag::B;
  if (s == "c" || s == "usp") return SeriesTag::C;
  if (s == "d" || s == "spin-even") return SeriesTag::D;
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

char tag_letter(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::A: return 'A';
    case SeriesTag::B: return 'B';
    case SeriesTag::C: return 'C';
    case SeriesTag::D: return 'D';
  }
  return '?';
}

int rank(const Series& s) { return s.tag == SeriesTag::A ? s.n - 1 : s.n; }

int group_dim(const Series& s) {
  const int n = s.n;
  switch (s.tag) {
    case SeriesTag::A: return n * n - 1;
    case SeriesTag::B:
    case SeriesTag::C: return n * (2 * n + 1);
    case SeriesTag::D: return n * (2 * n - 1);
  }
  return 0;
}

int center_order(const Series& s) {
  switch (s.tag) {
    case SeriesTag::A: return s.n;
    case SeriesTag::B:
    case SeriesTag::C: return 2;
    case SeriesTag::D: return 4;
  }
  return 1;
}

std::string group_name(const Series& s) {
  switch (s.tag) {
    case SeriesTag::A: return "SU(" + std::to_string(s.n) + ")";
    case SeriesTag::B: return "Spin(" + std::to_string(2 * s.n + 1) + ")";
    case SeriesTag::C: return "USp(" + std::to_string(2 * s.n) + ")";
    case SeriesTag::D: return "Spin(" + std::to_string(2 * s.n) + ")";
  }
  return "?";
}

}  // namespace lieconc
