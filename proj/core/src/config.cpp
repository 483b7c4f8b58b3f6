#include "torelli/config.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "torelli/error.hpp"

namespace torelli {

  void validate(PartitionConfig const& c) {
    if (c.n < 1) {
      throw DomainError("handle count n must be at least 1");
    }
    if (c.b < 0) {
      throw DomainError("boundary count b must be non-negative");
    }
    if ((c.b == 0) != c.partition.empty()) {
      throw DomainError(c.b == 0 ? "b = 0 requires an empty partition"
                                 : "partition must cover boundary labels 1..b");
    }
    std::set<int> seen;
    for (std::size_t r = 0; r < c.partition.size(); ++r) {
      if (c.partition[r].empty()) {
        throw DomainError("block " + std::to_string(r + 1) + " is empty");
      }
      for (int label : c.partition[r]) {
        if (label < 1 || label > c.b) {
          throw DomainError("boundary label " + std::to_string(label)
                            + " outside 1.." + std::to_string(c.b));
        }
        if (!seen.insert(label).second) {
          throw DomainError("boundary label " + std::to_string(label)
                            + " repeated");
        }
      }
    }
    if (static_cast<int>(seen.size()) != c.b) {
      for (int label = 1; label <= c.b; ++label) {
        if (!seen.contains(label)) {
          throw DomainError("boundary label " + std::to_string(label)
                            + " not covered by the partition");
        }
      }
    }
  }

  std::size_t capped_rank(PartitionConfig const& c) {
    validate(c);
    std::size_t m = static_cast<std::size_t>(c.n);
    for (auto const& block : c.partition) {
      m += block.size() == 1 ? 1 : block.size() - 1;
    }
    return m;
  }

  std::string to_string(BasisRole const& role) {
    switch (role.kind) {
      case BasisRole::Kind::loop:
        return "loop:" + std::to_string(role.index);
      case BasisRole::Kind::arc:
        return "arc:" + std::to_string(role.block) + ":"
               + std::to_string(role.index);
      case BasisRole::Kind::handle:
        return "handle:" + std::to_string(role.block);
    }
    return {};
  }

  BasisRole parse_role(std::string const& text) {
    std::vector<std::string> parts;
    std::stringstream        ss(text);
    std::string              item;
    while (std::getline(ss, item, ':')) {
      parts.push_back(item);
    }
    auto num = [&](std::string const& s) {
      std::size_t used = 0;
      int         v    = 0;
      try {
        v = std::stoi(s, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != s.size() || s.empty()) {
        throw ParseError("bad basis role '" + text + "'", 0);
      }
      return v;
    };
    if (parts.size() == 2 && parts[0] == "loop") {
      return BasisRole::loop(num(parts[1]));
    }
    if (parts.size() == 3 && parts[0] == "arc") {
      return BasisRole::arc(num(parts[1]), num(parts[2]));
    }
    if (parts.size() == 2 && parts[0] == "handle") {
      return BasisRole::handle(num(parts[1]));
    }
    throw ParseError("bad basis role '" + text + "'", 0);
  }

  CappedBasis::CappedBasis(PartitionConfig config) : _config(std::move(config)) {
    validate(_config);
    for (int i = 1; i <= _config.n; ++i) {
      _layout.push_back(BasisRole::loop(i));
    }
    for (std::size_t r = 1; r <= _config.partition.size(); ++r) {
      auto const size = _config.partition[r - 1].size();
      auto const rr   = static_cast<int>(r);
      if (size == 1) {
        _layout.push_back(BasisRole::handle(rr));
      } else {
        for (std::size_t s = 2; s <= size; ++s) {
          _layout.push_back(BasisRole::arc(rr, static_cast<int>(s)));
        }
      }
    }
  }

  int CappedBasis::index_of(BasisRole const& role) const {
    auto it = std::find(_layout.begin(), _layout.end(), role);
    if (it == _layout.end()) {
      throw DomainError("basis role " + to_string(role)
                        + " does not exist for this configuration");
    }
    return static_cast<int>(it - _layout.begin()) + 1;
  }

  BasisRole const& CappedBasis::role_of(int index) const {
    if (index < 1 || static_cast<std::size_t>(index) > _layout.size()) {
      throw DomainError("generator index " + std::to_string(index)
                        + " out of range");
    }
    return _layout[static_cast<std::size_t>(index - 1)];
  }

  std::vector<int> CappedBasis::block_generators(int r) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < _layout.size(); ++k) {
      if (_layout[k].kind != BasisRole::Kind::loop && _layout[k].block == r) {
        out.push_back(static_cast<int>(k + 1));
      }
    }
    return out;
  }

  bool CappedBasis::in_block(int index, int r) const {
    auto const& role = role_of(index);
    return role.kind != BasisRole::Kind::loop && role.block == r;
  }

  CappedBasis build_basis(PartitionConfig const& config) {
    return CappedBasis(config);
  }

  std::vector<std::vector<std::vector<int>>> ordered_partitions(int b) {
    using Blocks = std::vector<std::vector<int>>;
    // Set partitions first (blocks sorted), then every order of blocks and
    // of labels within blocks.
    std::vector<Blocks>          set_parts;
    std::function<void(int, Blocks&)> grow = [&](int label, Blocks& cur) {
      if (label > b) {
        set_parts.push_back(cur);
        return;
      }
      for (std::size_t k = 0; k < cur.size(); ++k) {
        cur[k].push_back(label);
        grow(label + 1, cur);
        cur[k].pop_back();
      }
      cur.push_back({label});
      grow(label + 1, cur);
      cur.pop_back();
    };
    Blocks empty;
    grow(1, empty);

    std::vector<Blocks> out;
    for (auto parts : set_parts) {
      std::sort(parts.begin(), parts.end());
      do {
        // Cartesian product over within-block permutations.
        std::function<void(std::size_t, Blocks&)> expand
            = [&](std::size_t k, Blocks& cur) {
                if (k == parts.size()) {
                  out.push_back(cur);
                  return;
                }
                auto block = parts[k];
                std::sort(block.begin(), block.end());
                do {
                  cur.push_back(block);
                  expand(k + 1, cur);
                  cur.pop_back();
                } while (std::next_permutation(block.begin(), block.end()));
              };
        Blocks cur;
        expand(0, cur);
      } while (std::next_permutation(parts.begin(), parts.end()));
    }
    return out;
  }

}  // namespace torelli
