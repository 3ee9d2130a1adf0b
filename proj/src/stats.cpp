#include "ttkc/stats.hpp"

#include <iomanip>
#include <sstream>

namespace ttkc {

stats_report make_stats(const tensor_train &tt) {
  stats_report s;
  for (const auto &c : tt.cores())
    s.shapes.push_back({c.left_rank(), 2, c.right_rank()});
  s.max_rank = tt.rank();
  s.modes = tt.modes();
  s.arity = tt.arity();
  s.entries = tt.size();
  s.nonzeros = tt.nonzeros();
  s.lower_bound = s.max_rank + s.modes;
  return s;
}

std::string format_stats(const stats_report &s) {
  std::ostringstream shapes;
  for (std::size_t i = 0; i < s.shapes.size(); ++i)
    shapes << (i ? " " : "") << s.shapes[i][0] << 'x' << s.shapes[i][1] << 'x'
           << s.shapes[i][2];
  std::ostringstream ranks;
  for (std::size_t i = 0; i < s.shapes.size(); ++i)
    ranks << s.shapes[i][0] << ' ';
  ranks << 1;

  const std::pair<const char *, std::string> rows[] = {
      {"arity", std::to_string(s.arity)},
      {"modes", std::to_string(s.modes)},
      {"ranks", ranks.str()},
      {"max_rank", std::to_string(s.max_rank)},
      {"entries", std::to_string(s.entries)},
      {"nonzeros", std::to_string(s.nonzeros)},
      {"lower_bound", std::to_string(s.lower_bound)},
      {"shapes", shapes.str()},
  };
  std::ostringstream out;
  for (const auto &[key, value] : rows)
    out << std::left << std::setw(13) << (std::string(key) + ":") << value
        << '\n';
  return out.str();
}

} // namespace ttkc
