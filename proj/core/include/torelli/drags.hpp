#ifndef TORELLI_DRAGS_HPP_
#define TORELLI_DRAGS_HPP_

// Drag generators of the partitioned Torelli group acting on the capped free
// basis, their relations, and the abelian image under tau.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torelli/config.hpp"
#include "torelli/int_matrix.hpp"
#include "torelli/magnus.hpp"
#include "torelli/word.hpp"

namespace torelli {

  struct HandleDrag {  // HD:i,j
    int  i = 0, j = 0;
    auto operator<=>(HandleDrag const&) const = default;
  };
  struct CommutatorDrag {  // CD+:i,j,k or CD-:i,j,k
    bool plus = false;
    int  i = 0, j = 0, k = 0;
    auto operator<=>(CommutatorDrag const&) const = default;
  };
  struct BoundaryCommutatorDrag {  // BCD:r,s,i,j
    int  r = 0, s = 0, i = 0, j = 0;
    auto operator<=>(BoundaryCommutatorDrag const&) const = default;
  };
  struct PartitionDrag {  // PD:r,j
    int  r = 0, j = 0;
    auto operator<=>(PartitionDrag const&) const = default;
  };

  using DragGenerator = std::variant<HandleDrag, CommutatorDrag,
                                     BoundaryCommutatorDrag, PartitionDrag>;

  struct DragToken {
    DragGenerator gen;
    int           exponent = 1;  // +1 or -1
    friend bool   operator==(DragToken const&, DragToken const&) = default;
  };

  // [t1, t2, ...] realizes as t1 o t2 o ...: the rightmost token acts first.
  using DragWord = std::vector<DragToken>;

  std::string   to_string(DragGenerator const& g);
  std::string   to_string(DragToken const& t);
  std::string   to_string(DragWord const& w);
  DragGenerator parse_generator(std::string_view text);
  DragToken     parse_token(std::string_view text);
  // Whitespace separated tokens; empty text is the empty word.
  DragWord parse_drag_word(std::string_view text);

  // Throws DomainError if the indices are out of range for the config.
  void validate(PartitionConfig const& config, DragGenerator const& g);

  GroupMap realize(CappedBasis const& basis, DragGenerator const& g);
  GroupMap realize(CappedBasis const& basis, DragToken const& t);
  GroupMap realize_word(CappedBasis const& basis, DragWord const& w);

  std::vector<DragGenerator> all_generators(PartitionConfig const& config);
  std::vector<DragGenerator> reduced_generating_set(PartitionConfig const& config);

  // Pushing the boundary addressed by (r, s) around gamma, a word in the loop
  // generators y_1..y_n.
  GroupMap push_boundary(CappedBasis const& basis, int r, int s, Word const& gamma);

  // The class of gamma that push(gamma) adds in homology, with its sign.
  int push_homology_sign(PartitionConfig const& config, int r, int s);

  // f restricts to F_m and is trivial on H_1(F_m).
  bool membership_iop(CappedBasis const& basis, GroupMap const& f);

  struct PdRelationReport {
    bool holds = false;           // composite is the identity (or inner, b = 0)
    bool tau_sum_holds = false;   // sum of tau images matches
    std::optional<Word> inner_conjugator;
    DragWord word;
  };
  PdRelationReport verify_pd_relation(PartitionConfig const& config, int j);

  struct BcdRelationReport {
    bool     holds = false;          // prod_s BCD(r,s) = [PD_i, PD_j]
    bool     naive_reading = false;  // same with the commutator read as a
                                     // composition of maps in written order
    bool     tau_sum_zero = false;
    DragWord product;
    DragWord commutator;
  };
  BcdRelationReport verify_bcd_relation(PartitionConfig const& config, int r,
                                        int i, int j);

  struct CdIdentityReport {
    bool        holds = false;
    std::string expression;  // the HD word matching CD+ o CD-, if any
    DragWord    word;
  };
  CdIdentityReport verify_cd_identity(PartitionConfig const& config, int i,
                                      int j, int k);

  HomTable tau_star(CappedBasis const& basis, DragWord const& w);

  struct RankReport {
    std::size_t computed_rank = 0;
    std::size_t formula_rank  = 0;
    std::size_t reduced_size  = 0;
    IntVector   invariant_factors;
    [[nodiscard]] bool match() const {
      return computed_rank == formula_rank;
    }
  };
  std::size_t formula_rank(PartitionConfig const& config);
  RankReport  abelianization_rank(PartitionConfig const& config);

}  // namespace torelli

#endif  // TORELLI_DRAGS_HPP_
