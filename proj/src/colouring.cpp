#include "webworld/colouring.hpp"
#include "webworld/error.hpp"

#include <algorithm>
#include <numeric>

namespace webworld {

Colouring Colouring::from_assignment(std::vector<int> assignment) {
  int colours = 0;
  for (int v : assignment) {
    if (v < 1) throw WebError(ErrorKind::BadRange, "colours are 1-based");
    colours = std::max(colours, v);
  }
  std::vector<bool> used(colours + 1, false);
  for (int v : assignment) used[v] = true;
  for (int j = 1; j <= colours; ++j)
    if (!used[j]) throw WebError(ErrorKind::NotSurjective, "colour " + std::to_string(j) + " unused");
  return Colouring{std::move(assignment), colours};
}

Colouring Colouring::constant(std::size_t length) {
  return Colouring{std::vector<int>(length, 1), length ? 1 : 0};
}

SurjectiveColourings::SurjectiveColourings(int length, int colours)
    : length_(length), colours_(colours) {
  if (colours < 1 || colours > length)
    throw WebError(ErrorKind::BadRange, "need 1 <= colours <= length, got colours = " +
                                            std::to_string(colours) + ", length = " + std::to_string(length));
  rgs_.assign(length, 0);
  prefix_max_.assign(length, 0);
  block_colour_.resize(colours);
}

bool SurjectiveColourings::advance_partition() {
  // Next restricted-growth string (lexicographic) with exactly colours_ blocks.
  for (;;) {
    int i = length_ - 1;
    for (; i >= 1; --i) {
      const int cap = std::min(colours_ - 1, prefix_max_[i - 1] + 1);
      if (rgs_[i] < cap) break;
    }
    if (i < 1) return false;
    ++rgs_[i];
    prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
    for (int j = i + 1; j < length_; ++j) {
      rgs_[j] = 0;
      prefix_max_[j] = prefix_max_[j - 1];
    }
    if (prefix_max_[length_ - 1] + 1 == colours_) return true;
  }
}

bool SurjectiveColourings::next(Colouring& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (prefix_max_[length_ - 1] + 1 != colours_ && !advance_partition()) {
      done_ = true;
      return false;
    }
    std::iota(block_colour_.begin(), block_colour_.end(), 1);
  } else if (!std::next_permutation(block_colour_.begin(), block_colour_.end())) {
    if (!advance_partition()) {
      done_ = true;
      return false;
    }
    std::iota(block_colour_.begin(), block_colour_.end(), 1);
  }
  out.colours = colours_;
  out.assignment.resize(length_);
  for (int i = 0; i < length_; ++i) out.assignment[i] = block_colour_[rgs_[i]];
  return true;
}

BigInt SurjectiveColourings::expected_count() const {
  return factorial(colours_) * stirling2(length_, colours_);
}

void for_each_surjection(int length, int colours,
                         const std::function<void(std::span<const int>)>& visit) {
  SurjectiveColourings stream(length, colours);
  Colouring c;
  while (stream.next(c)) visit(c.assignment);
}

WebDiagram reconstruct(const WebDiagram& d, const Colouring& c) {
  if (c.assignment.size() != d.size())
    throw WebError(ErrorKind::LengthMismatch, "colouring has " + std::to_string(c.assignment.size()) +
                                                  " entries for " + std::to_string(d.size()) + " edges");
  const Colouring checked = Colouring::from_assignment(c.assignment);
  if (checked.colours != c.colours)
    throw WebError(ErrorKind::NotSurjective, "declared " + std::to_string(c.colours) + " colours, " +
                                                 std::to_string(checked.colours) + " used");

  WebDiagram result = WebDiagram::validate(std::vector<Edge>{}, d.peg_count());
  for (int colour = 1; colour <= c.colours; ++colour) {
    std::vector<Edge> block;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (c.assignment[i] == colour) block.push_back(d.edges()[i]);
    result = sum(result, rel(d, block));
  }
  return result;
}

ReconstructionKernel::ReconstructionKernel(const WebDiagram& d) : diagram_(&d), by_peg_(d.peg_count() + 1) {
  for (int peg = 1; peg <= d.peg_count(); ++peg) by_peg_[peg].resize(d.endpoints_on(peg));
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Edge& e = d.edges()[i];
    by_peg_[e.x][e.a - 1] = {static_cast<int>(i), false};
    by_peg_[e.y][e.b - 1] = {static_cast<int>(i), true};
  }
}

void ReconstructionKernel::apply(std::span<const int> colour, std::vector<Edge>& out) const {
  out = diagram_->edges();
  for (std::size_t peg = 1; peg < by_peg_.size(); ++peg) {
    const auto& eps = by_peg_[peg];
    if (eps.empty()) continue;
    scratch_.clear();
    for (std::size_t h = 0; h < eps.size(); ++h)
      scratch_.emplace_back(colour[eps[h].edge], static_cast<int>(h));
    std::sort(scratch_.begin(), scratch_.end());
    for (std::size_t r = 0; r < scratch_.size(); ++r) {
      const Endpoint& ep = eps[scratch_[r].second];
      (ep.right ? out[ep.edge].b : out[ep.edge].a) = static_cast<int>(r) + 1;
    }
  }
  std::sort(out.begin(), out.end());
}

WebDiagram ReconstructionKernel::apply(std::span<const int> colour) const {
  if (colour.size() != diagram_->size())
    throw WebError(ErrorKind::LengthMismatch, "colouring length differs from edge count");
  std::vector<Edge> out;
  apply(colour, out);
  return make_unchecked(std::move(out), diagram_->peg_count());
}

}  // namespace webworld
