#ifndef TORELLI_CONFIG_HPP_
#define TORELLI_CONFIG_HPP_

// (n, b, P) configurations and the capped free basis of F_m obtained by
// filling each block of P with a standard piece.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace torelli {

  struct PartitionConfig {
    int                           n = 1;  // handles
    int                           b = 0;  // boundary components
    std::vector<std::vector<int>> partition;

    [[nodiscard]] std::size_t block_count() const noexcept {
      return partition.size();
    }
    // 1-based block index r.
    [[nodiscard]] std::size_t block_size(int r) const {
      return partition.at(static_cast<std::size_t>(r - 1)).size();
    }
    [[nodiscard]] bool is_singleton(int r) const {
      return block_size(r) == 1;
    }

    friend bool operator==(PartitionConfig const&,
                           PartitionConfig const&) = default;
  };

  // Throws DomainError naming the violated invariant.
  void validate(PartitionConfig const& config);

  std::size_t capped_rank(PartitionConfig const& config);

  struct BasisRole {
    enum class Kind { loop, arc, handle };

    Kind kind = Kind::loop;
    int  block = 0;  // r for arc/handle
    int  index = 0;  // i for loop, s for arc

    static BasisRole loop(int i) {
      return {Kind::loop, 0, i};
    }
    static BasisRole arc(int r, int s) {
      return {Kind::arc, r, s};
    }
    static BasisRole handle(int r) {
      return {Kind::handle, r, 0};
    }

    friend auto operator<=>(BasisRole const&, BasisRole const&) = default;
  };

  // "loop:i", "arc:r:s", "handle:r"
  std::string to_string(BasisRole const& role);
  BasisRole   parse_role(std::string const& text);

  class CappedBasis {
   public:
    explicit CappedBasis(PartitionConfig config);

    [[nodiscard]] PartitionConfig const& config() const noexcept {
      return _config;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _layout.size();
    }
    [[nodiscard]] std::vector<BasisRole> const& layout() const noexcept {
      return _layout;
    }
    // 1-based generator index of a role; throws DomainError if absent.
    [[nodiscard]] int index_of(BasisRole const& role) const;
    [[nodiscard]] BasisRole const& role_of(int index) const;

    // Generator indices of Y_r: the handle of a singleton block, or its
    // arcs Arc(r, 2..|p_r|).
    [[nodiscard]] std::vector<int> block_generators(int r) const;

    [[nodiscard]] bool in_block(int index, int r) const;

   private:
    PartitionConfig        _config;
    std::vector<BasisRole> _layout;
  };

  CappedBasis build_basis(PartitionConfig const& config);

  // Every ordered sequence of blocks, each block in every internal order,
  // covering {1..b}.
  std::vector<std::vector<std::vector<int>>> ordered_partitions(int b);

}  // namespace torelli

#endif  // TORELLI_CONFIG_HPP_
