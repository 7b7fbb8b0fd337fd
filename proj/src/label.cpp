#include "patmine/label.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "patmine/error.hpp"

namespace patmine {
namespace {

struct InternTable {
  std::mutex mu;
  std::deque<std::string> symbols;  // element addresses are stable
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

Label::Label(std::string_view symbol) {
  if (symbol.empty()) throw Error(ErrorCode::EmptyLabel, "label symbol must be non-empty");
  InternTable& t = table();
  std::lock_guard lock(t.mu);
  if (auto it = t.ids.find(symbol); it != t.ids.end()) {
    id_ = it->second;
    symbol_ = &t.symbols[id_];
    return;
  }
  id_ = static_cast<std::uint32_t>(t.symbols.size());
  symbol_ = &t.symbols.emplace_back(symbol);
  t.ids.emplace(*symbol_, id_);
}

}  // namespace patmine
