#include "slodowy/pyramids.hpp"

#include "slodowy/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace slodowy {

Pyramid::Pyramid(Partition shape, std::vector<int> offsets)
    : shape_(std::move(shape)), offsets_(std::move(offsets)) {
  if (static_cast<int>(offsets_.size()) != shape_.length())
    throw InputError("pyramid needs one offset per row");
  for (int r = 2; r <= rows(); ++r) {
    if (first_col(r) < first_col(r - 1) || last_col(r) > last_col(r - 1))
      throw InputError("row " + std::to_string(r) + " overhangs the row below it");
  }
}

std::vector<Box> Pyramid::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= rows(); ++r)
    for (int t = 0; t < shape_.part(r); ++t) out.push_back({r, col(r, t)});
  return out;
}

Filling::Filling(Pyramid pyramid, const std::vector<int>& labels) : pyramid_(std::move(pyramid)) {
  const int n = pyramid_.shape().size();
  if (static_cast<int>(labels.size()) != n) throw InputError("filling needs one label per box");
  box_of_.assign(n, Box{});
  std::vector<bool> seen(n + 1, false);
  std::size_t pos = 0;
  for (int r = 1; r <= pyramid_.rows(); ++r) {
    labels_.emplace_back();
    for (int t = 0; t < pyramid_.shape().part(r); ++t) {
      const int k = labels[pos++];
      if (k < 1 || k > n || seen[k]) throw InputError("filling labels must be a bijection onto 1..n");
      seen[k] = true;
      labels_.back().push_back(k);
      box_of_[k - 1] = {r, pyramid_.col(r, t)};
    }
  }
}

int Filling::label_from_right(int row, int t) const {
  const auto& r = labels_.at(row - 1);
  return r.at(r.size() - t);
}

std::optional<int> Filling::label_at_col(int row, int c) const {
  if (row < 1 || row > pyramid_.rows()) return std::nullopt;
  const int d = c - pyramid_.first_col(row);
  if (d < 0 || d % 2 != 0 || d / 2 >= pyramid_.shape().part(row)) return std::nullopt;
  return labels_[row - 1][d / 2];
}

std::vector<int> Filling::labels_row_major() const {
  std::vector<int> out;
  for (const auto& r : labels_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Pyramid> enumerate_pyramids(const Partition& shape) {
  std::vector<Pyramid> out;
  std::vector<int> off(shape.length(), 0);
  std::function<void(int)> rec = [&](int r) {
    if (r > shape.length()) {
      out.emplace_back(shape, off);
      return;
    }
    // first box no further left than the row below, last box no further right
    const int lo = off[r - 2];
    const int hi = off[r - 2] + 2 * (shape.part(r - 1) - shape.part(r));
    for (int o = lo; o <= hi; ++o) {
      off[r - 1] = o;
      rec(r + 1);
    }
  };
  if (shape.length() == 0) return out;
  rec(2);
  return out;
}

Pyramid right_aligned(const Partition& shape) {
  std::vector<int> off;
  for (int r = 1; r <= shape.length(); ++r) off.push_back(2 * (shape.part(1) - shape.part(r)));
  return Pyramid(shape, off);
}

Filling standard_filling(const Pyramid& p) {
  auto boxes = p.boxes();
  std::vector<std::size_t> order(boxes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(boxes[a].col, boxes[a].row) < std::pair(boxes[b].col, boxes[b].row);
  });
  std::vector<int> labels(boxes.size());
  for (std::size_t k = 0; k < order.size(); ++k) labels[order[k]] = static_cast<int>(k) + 1;
  return Filling(p, labels);
}

Mat nilpotent_of(const Filling& f) {
  const int n = f.size();
  Mat e(n);
  for (int r = 1; r <= f.pyramid().rows(); ++r)
    for (int t = 0; t + 1 < f.pyramid().shape().part(r); ++t) e.set(f.label_at(r, t), f.label_at(r, t + 1), Rat(1));
  return e;
}

Mat pyramid_semisimple(const Filling& f) {
  const int n = f.size();
  Rat mean = 0;
  for (int k = 1; k <= n; ++k) mean += f.col(k);
  mean /= n;
  std::vector<Rat> d;
  for (int k = 1; k <= n; ++k) d.push_back(mean - f.col(k));
  return Mat::diagonal(d);
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii" || name == "text") return RenderFormat::ascii;
  if (name == "tex") return RenderFormat::tex;
  if (name == "dot") return RenderFormat::dot;
  throw InputError("unknown render format: " + name);
}

namespace {

std::string box_label(const std::optional<Filling>& f, int r, int t) {
  if (!f) return "";
  return std::to_string(f->label_at(r, t));
}

std::string render_ascii(const Pyramid& p, const std::optional<Filling>& f) {
  std::ostringstream os;
  for (int r = p.rows(); r >= 1; --r) {
    // a half box is two characters, a box is "[ 7]"
    os << std::string(2 * p.first_col(r), ' ');
    for (int t = 0; t < p.shape().part(r); ++t) {
      std::string s = box_label(f, r, t);
      os << '[' << std::string(2 - std::min<std::size_t>(2, s.size()), ' ') << s << ']';
    }
    os << '\n';
  }
  return os.str();
}

std::string render_tex(const Pyramid& p, const std::optional<Filling>& f) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[x=0.5cm,y=1cm]\n";
  for (int r = 1; r <= p.rows(); ++r)
    for (int t = 0; t < p.shape().part(r); ++t) {
      const int c = p.col(r, t);
      os << "  \\draw (" << c - 1 << "," << r - 1 << ") rectangle (" << c + 1 << "," << r << ");";
      if (f) os << " \\node at (" << c << "," << r - 1 << ".5) {" << box_label(f, r, t) << "};";
      os << '\n';
    }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_dot(const Pyramid& p, const std::optional<Filling>& f) {
  std::ostringstream os;
  os << "digraph pyramid {\n  node [shape=box];\n";
  auto id = [&](int r, int t) { return "b" + std::to_string(r) + "_" + std::to_string(t); };
  for (int r = 1; r <= p.rows(); ++r)
    for (int t = 0; t < p.shape().part(r); ++t) {
      std::string lab = f ? box_label(f, r, t) : ("r" + std::to_string(r) + "c" + std::to_string(p.col(r, t)));
      os << "  " << id(r, t) << " [label=\"" << lab << "\", pos=\"" << p.col(r, t) << "," << r - 1 << "!\"];\n";
    }
  for (int r = 1; r <= p.rows(); ++r)
    for (int t = 0; t + 1 < p.shape().part(r); ++t) os << "  " << id(r, t) << " -> " << id(r, t + 1) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render(const Pyramid& p, const std::optional<Filling>& f, RenderFormat format) {
  switch (format) {
    case RenderFormat::ascii: return render_ascii(p, f);
    case RenderFormat::tex: return render_tex(p, f);
    case RenderFormat::dot: return render_dot(p, f);
  }
  throw InputError("unknown render format");
}

std::string render_hasse(int n, RenderFormat format) {
  const auto parts = all_partitions(n);
  std::map<Partition, int> id;
  for (std::size_t k = 0; k < parts.size(); ++k) id[parts[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> edges;  // (lower, upper)
  for (const auto& mu : parts)
    for (const auto& lam : covers_above(mu)) edges.emplace_back(id[mu], id[lam]);
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  switch (format) {
    case RenderFormat::dot:
      os << "digraph hasse {\n  rankdir=BT;\n";
      for (std::size_t k = 0; k < parts.size(); ++k) os << "  p" << k << " [label=\"" << parts[k].str() << "\"];\n";
      for (auto [a, b] : edges) os << "  p" << a << " -> p" << b << ";\n";
      os << "}\n";
      break;
    case RenderFormat::tex: {
      // one tikz row per rank in the longest-chain sense, counted from the bottom
      std::vector<int> level(parts.size(), 0);
      for (int k = static_cast<int>(parts.size()) - 1; k >= 0; --k)
        for (auto [a, b] : edges)
          if (a == k) level[b] = std::max(level[b], level[a] + 1);
      std::map<int, int> used;
      os << "\\begin{tikzpicture}[x=2cm,y=1.2cm]\n";
      for (int k = static_cast<int>(parts.size()) - 1; k >= 0; --k)
        os << "  \\node (p" << k << ") at (" << used[level[k]]++ << "," << level[k] << ") {$" << parts[k].str()
           << "$};\n";
      for (auto [a, b] : edges) os << "  \\draw (p" << a << ") -- (p" << b << ");\n";
      os << "\\end{tikzpicture}\n";
      break;
    }
    case RenderFormat::ascii:
      for (const auto& p : parts) {
        os << p.str();
        const char* sep = " < ";
        for (auto [a, b] : edges)
          if (parts[a] == p) os << sep << parts[b].str(), sep = ", ";
        os << "\n";
      }
      break;
  }
  return os.str();
}

}  // namespace slodowy
