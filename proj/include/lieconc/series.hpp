#pragma once

#include <string>
#include <string_view>

namespace lieconc {

/// Classical series, indexed the way the group families are usually named:
/// A → SU(n), B → Spin(2n+1), C → USp(2n), D → Spin(2n).
enum class SeriesTag { A, B, C, D };

struct Series {
  SeriesTag tag;
  int n;

  friend bool operator==(const Series&, const Series&) = default;
};

/// Smallest admissible n for the tag (A, B, C: 2; D: 4).
int min_n(SeriesTag tag);

/// Validating constructor; throws std::invalid_argument below the minimum.
Series make_series(SeriesTag tag, int n);

/// Accepts "a"/"su", "b"/"spin-odd", "c"/"usp", "d"/"spin-even" (any case).
/// Throws std::invalid_argument for anything else.
SeriesTag parse_series_tag(std::string_view name);

char tag_letter(SeriesTag tag);
int rank(const Series& s);
int group_dim(const Series& s);
/// Order of the center of the simply connected form.
int center_order(const Series& s);
/// "SU(5)", "Spin(7)", "USp(6)", "Spin(8)".
std::string group_name(const Series& s);

}  // namespace lieconc
