#include "affsch/wiring.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace affsch {

namespace {

constexpr int kShiftEvent = -1;

Int apply_event(int event, Int sign, Int x, int n) {
  if (event == kShiftEvent) return x + sign;
  const Int rem = x - n * floor_div(x, n);
  if (rem == event) return x + 1;
  if (rem == (event + 1) % n) return x - 1;
  return x;
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string render_ascii(const WiringDiagram& d) {
  const int events = d.event_count();
  const int n = d.n;
  std::vector<int> wire_at_left(n + 1, 0);
  for (int i = 1; i <= n; ++i) wire_at_left[d.wires[i - 1].end] = i;
  std::vector<std::string> cross_row(n + 1, std::string(3 * events, ' '));
  for (const auto& c : d.crossings) {
    const int track = c.letter == 0 ? n : c.letter;
    cross_row[track][3 * c.column + 1] = 'X';
  }
  for (int col = 0; col < events && col < static_cast<int>(std::abs(d.sigma_power)); ++col)
    for (int t = 1; t <= n; ++t) cross_row[t][3 * col + 1] = d.sigma_power > 0 ? '\\' : '/';

  std::ostringstream os;
  const std::string pad(12, ' ');
  const std::string border = pad + std::string(3 * events + 2, '~');
  os << border << "   top edge glued to bottom edge\n";
  for (int t = 1; t <= n; ++t) {
    const int w = wire_at_left[t];
    char label[32];
    std::snprintf(label, sizeof label, "w%-3d c=%-3lld ", w, static_cast<long long>(d.wires[w - 1].winding));
    os << rtrim(pad) << "\n";
    os << label << '-' << std::string(3 * events, '-') << "- w" << t << "\n";
    os << rtrim(pad + ' ' + cross_row[t]) << "\n";
  }
  os << border << "\n";
  return os.str();
}

std::string render_svg(const WiringDiagram& d) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  const int events = d.event_count();
  const int n = d.n;
  Int ymin = 1, ymax = n;
  for (const auto& col : d.positions)
    for (Int y : col) {
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  const int step = 40, row = 30, left = 60, top = 30;
  auto X = [&](int b) { return left + step * b; };
  auto Y = [&](double h) { return top + row * (h - static_cast<double>(ymin)); };
  const int width = X(events) + 60;
  const int height = static_cast<int>(Y(static_cast<double>(ymax))) + top;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  // seams of the cylinder: between heights mn and mn+1
  for (Int m = floor_div(ymin - 1, n); m * n <= ymax; ++m) {
    const double y = Y(static_cast<double>(m * n) + 0.5);
    if (y < 0 || y > height) continue;
    os << "  <line x1=\"" << X(0) - 20 << "\" y1=\"" << y << "\" x2=\"" << X(events) + 20 << "\" y2=\"" << y
       << "\" stroke=\"#999\" stroke-dasharray=\"4,3\"/>\n";
  }
  for (int i = 1; i <= n; ++i) {
    os << "  <polyline class=\"wire\" data-wire=\"" << i << "\" fill=\"none\" stroke=\"" << kPalette[(i - 1) % 8]
       << "\" stroke-width=\"2\" points=\"";
    for (int b = 0; b <= events; ++b)
      os << (b ? " " : "") << X(b) << ',' << Y(static_cast<double>(d.positions[b][i - 1]));
    os << "\"/>\n";
    os << "  <text x=\"" << X(events) + 8 << "\" y=\"" << Y(static_cast<double>(i)) + 4 << "\" font-size=\"12\">" << i
       << "</text>\n";
    os << "  <text x=\"" << X(0) - 40 << "\" y=\"" << Y(static_cast<double>(d.positions[0][i - 1])) + 4
       << "\" font-size=\"12\">" << i << " (c=" << d.wires[i - 1].winding << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

ReducedWord WiringDiagram::word() const {
  ReducedWord w{n, sigma_power, {}};
  for (const auto& c : crossings) w.letters.push_back(c.letter);
  return w;
}

WiringDiagram build_diagram(const AffinePermutation& p) {
  const int n = p.n();
  const ReducedWord word = greedy_reduced_word(p);
  std::vector<int> events(static_cast<std::size_t>(std::abs(word.sigma_power)), kShiftEvent);
  events.insert(events.end(), word.letters.begin(), word.letters.end());
  const Int sign = word.sigma_power >= 0 ? 1 : -1;

  WiringDiagram d;
  d.n = n;
  d.sigma_power = word.sigma_power;
  d.positions.assign(events.size() + 1, std::vector<Int>(n));
  for (int i = 0; i < n; ++i) d.positions.back()[i] = i + 1;
  for (std::size_t b = events.size(); b-- > 0;)
    for (int i = 0; i < n; ++i) d.positions[b][i] = apply_event(events[b], sign, d.positions[b + 1][i], n);

  for (std::size_t b = 0; b < events.size(); ++b) {
    if (events[b] == kShiftEvent) continue;
    const int j = events[b];
    const Int upper_track = j == 0 ? n : j;
    const Int lower_track = j == 0 ? 1 : j + 1;
    Crossing c{static_cast<int>(b), j, 0, 0};
    for (int i = 0; i < n; ++i) {
      const Int track = residue1(d.positions[b + 1][i], n);
      if (track == upper_track) c.upper = i + 1;
      if (track == lower_track) c.lower = i + 1;
    }
    d.crossings.push_back(c);
  }
  for (int i = 0; i < n; ++i) {
    const Int left = d.positions.front()[i];
    const Int end = residue1(left, n);
    d.wires.push_back(Wire{i + 1, static_cast<int>(end), (left - end) / n});
  }
  return d;
}

std::string render(const WiringDiagram& d, RenderFormat format) {
  return format == RenderFormat::ascii ? render_ascii(d) : render_svg(d);
}

}  // namespace affsch
