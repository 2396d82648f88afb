#include "luttff/states.hpp"

#include <algorithm>
#include <sstream>

#include "luttff/errors.hpp"

namespace luttff {

namespace {

// Partitions of `total` into exactly `parts` strictly decreasing values
// >= lo, emitted via `sink` as descending lists.
template <typename Sink>
void distinct_parts(int total, int parts, int lo, int max_first,
                    std::vector<int>& scratch, Sink&& sink) {
  if (parts == 0) {
    if (total == 0) sink(scratch);
    return;
  }
  // Remaining parts are distinct, below v, and >= lo; their sum is bracketed
  // by the tightest and loosest packings.
  for (int v = std::min(max_first, total); v >= lo; --v) {
    const int rest = total - v;
    const long min_rest =
        static_cast<long>(parts - 1) * lo +
        static_cast<long>(parts - 1) * (parts - 2) / 2;
    const long max_rest = static_cast<long>(parts - 1) * (v - 1) -
                          static_cast<long>(parts - 1) * (parts - 2) / 2;
    if (rest < min_rest || rest > max_rest) continue;
    scratch.push_back(v);
    distinct_parts(rest, parts - 1, lo, v - 1, scratch, sink);
    scratch.pop_back();
  }
}

std::vector<int> concat_key(const ChiralState& s) {
  std::vector<int> key = s.particles;
  key.insert(key.end(), s.holes.begin(), s.holes.end());
  return key;
}

}  // namespace

void ChiralState::validate() const {
  if (particles.size() != holes.size())
    throw invalid_state_error("ChiralState: particle/hole counts differ");
  for (std::size_t i = 0; i < particles.size(); ++i) {
    if (particles[i] < 1)
      throw invalid_state_error("ChiralState: particles must be >= 1");
    if (holes[i] > 0)
      throw invalid_state_error("ChiralState: holes must be <= 0");
    if (i > 0 && particles[i] >= particles[i - 1])
      throw invalid_state_error(
          "ChiralState: particles must strictly decrease");
    if (i > 0 && holes[i] >= holes[i - 1])
      throw invalid_state_error("ChiralState: holes must strictly decrease");
  }
}

int level(const ChiralState& state) {
  int lvl = 0;
  for (int p : state.particles) lvl += p;
  for (int q : state.holes) lvl -= q;
  return lvl;
}

std::vector<ChiralState> enumerate_level(int m, int cap) {
  if (m < 0) throw domain_error("enumerate_level: level must be >= 0");
  if (m > cap)
    throw resource_error("enumerate_level: level " + std::to_string(m) +
                         " exceeds the enumeration cap " + std::to_string(cap));

  std::vector<ChiralState> states;
  if (m == 0) {
    states.push_back({});
    return states;
  }

  for (int n = 1; n * n <= m; ++n) {
    // Split the level between the particle side and the hole depths:
    // particles are n distinct values >= 1, depths n distinct values >= 0.
    const int min_particle_sum = n * (n + 1) / 2;
    const int min_depth_sum = n * (n - 1) / 2;
    for (int sp = min_particle_sum; sp <= m - min_depth_sum; ++sp) {
      const int sd = m - sp;
      std::vector<std::vector<int>> particle_lists;
      std::vector<int> scratch;
      distinct_parts(sp, n, 1, sp, scratch,
                     [&](const std::vector<int>& v) { particle_lists.push_back(v); });
      std::vector<std::vector<int>> depth_lists;
      distinct_parts(sd, n, 0, sd, scratch,
                     [&](const std::vector<int>& v) { depth_lists.push_back(v); });
      for (const auto& particles : particle_lists) {
        for (const auto& depths : depth_lists) {
          ChiralState s;
          s.particles = particles;
          s.holes.resize(n);
          for (int i = 0; i < n; ++i) s.holes[i] = -depths[n - 1 - i];
          states.push_back(std::move(s));
        }
      }
    }
  }

  std::sort(states.begin(), states.end(),
            [](const ChiralState& a, const ChiralState& b) {
              const auto ka = concat_key(a);
              const auto kb = concat_key(b);
              return std::lexicographical_compare(kb.begin(), kb.end(),
                                                  ka.begin(), ka.end());
            });
  return states;
}

std::int64_t count_states(int m) {
  if (m < 0) throw domain_error("count_states: level must be >= 0");
  std::vector<std::int64_t> p(m + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= m; ++n) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const std::int64_t s = (k % 2 == 1) ? 1 : -1;
      acc += s * p[n - g1];
      if (g2 <= n) acc += s * p[n - g2];
    }
    p[n] = acc;
  }
  return p[m];
}

std::string state_label(const ChiralState& state) {
  if (state.pair_count() == 0) return "vacuum";
  std::ostringstream out;
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    if (i) out << ',';
    out << state.particles[i];
  }
  out << ';';
  for (std::size_t i = 0; i < state.holes.size(); ++i) {
    if (i) out << ',';
    out << state.holes[i];
  }
  return out.str();
}

ChiralState parse_state(const std::string& text) {
  if (text.empty() || text == "vacuum" || text == ";") return {};
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw invalid_state_error("parse_state: expected 'p,...;q,...' but got '" +
                              text + "'");
  auto parse_list = [](const std::string& part) {
    std::vector<int> values;
    std::istringstream in(part);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token.empty()) continue;
      std::size_t pos = 0;
      const int v = std::stoi(token, &pos);
      if (pos != token.size())
        throw invalid_state_error("parse_state: bad integer '" + token + "'");
      values.push_back(v);
    }
    return values;
  };
  ChiralState s;
  s.particles = parse_list(text.substr(0, semi));
  s.holes = parse_list(text.substr(semi + 1));
  s.validate();
  return s;
}

}  // namespace luttff
