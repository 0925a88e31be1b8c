#include "welzl/order.hpp"

#include <stdexcept>
#include <string>

namespace welzl {

Order::Order(std::size_t universe)
    : next_(universe, kNil), prev_(universe, kNil), present_(universe, false) {}

Order Order::from_sequence(std::size_t universe, std::span<const Id> sequence) {
  Order order(universe);
  for (Id v : sequence) {
    if (v >= universe || order.present_[v]) {
      throw std::invalid_argument("order: id " + std::to_string(v) +
                                  " out of range or repeated");
    }
    order.push_back(v);
  }
  return order;
}

void Order::push_back(Id v) {
  if (v >= universe() || present_[v]) throw std::logic_error("order: cannot append id");
  present_[v] = true;
  prev_[v] = tail_;
  next_[v] = kNil;
  if (tail_ == kNil) {
    head_ = v;
  } else {
    next_[tail_] = v;
  }
  tail_ = v;
  ++size_;
}

void Order::insert_after(Id anchor, Id v) {
  if (!contains(anchor)) {
    throw std::logic_error("order: representative " + std::to_string(anchor) +
                           " not present");
  }
  if (v >= universe() || present_[v]) {
    throw std::logic_error("order: id " + std::to_string(v) + " already placed");
  }
  present_[v] = true;
  const Id after = next_[anchor];
  next_[anchor] = v;
  prev_[v] = anchor;
  next_[v] = after;
  if (after == kNil) {
    tail_ = v;
  } else {
    prev_[after] = v;
  }
  ++size_;
}

std::vector<Id> Order::sequence() const {
  std::vector<Id> out;
  out.reserve(size_);
  for (Id v = head_; v != kNil; v = next_[v]) out.push_back(v);
  return out;
}

bool Order::is_permutation() const { return size_ == universe(); }

std::vector<std::size_t> inverse_permutation(std::size_t n, std::span<const Id> sequence) {
  if (sequence.size() != n) {
    throw std::invalid_argument("order has " + std::to_string(sequence.size()) +
                                " entries, expected " + std::to_string(n));
  }
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> position(n, kUnset);
  for (std::size_t p = 0; p < n; ++p) {
    const Id v = sequence[p];
    if (v >= n || position[v] != kUnset) {
      throw std::invalid_argument("order is not a permutation: id " + std::to_string(v));
    }
    position[v] = p;
  }
  return position;
}

}  // namespace welzl
