#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <provlog/formula.hpp>

namespace provlog {

using NodeId = int;

// Finite birelational model. leq[a][b] reads "a ≼ b" (the intuitionistic
// growth order), sub[a][b] reads "a ⊏ b" (the modal successor relation),
// val[a] is the set of atoms true at a.
//
// Well-formed models keep leq a partial order, satisfy the mixing law
// (≼;⊏) ⊆ ⊏, and make atoms persistent along leq; check_model tests all
// three. The surgeries below preserve well-formedness.
struct KripkeModel {
  int node_count = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<bool>> sub;
  std::vector<std::set<std::string>> val;
};

// Total atom valuation used to override a single node's atoms; atoms not
// listed count as false.
struct BooleanAssignment {
  std::set<std::string> true_atoms;
};

enum class FrameTag {
  Brilliant,         // (⊏;≼) ⊆ ⊏
  Neat,              // a ⊏ c and a ≼ b ≼ c imply a ⊏ b or b ⊏ c
  TreeFrame,         // strict ≼ united with ⊏ is a finite tree order
  Irreflexive,       // of ⊏
  Transitive,        // of ⊏
  SemiPerfect,       // tree frame + brilliant + neat + ⊏ irreflexive transitive
  Perfect,           // semi-perfect + complete
  QuasiClassical,    // strict ≼ successors coincide with ⊏ successors
  Classical,         // no strict ≼ successors
  SucClassical,      // every ⊏-accessible node is classical
  SucQuasiClassical, // every ⊏-accessible node is quasi-classical
  AtomComplete,      // atoms persist along ⊏
  SubBranching,      // no node has exactly one immediate ⊏ successor
  Complete,          // ⊏ successors are also strict ≼ successors
  SoundFor,          // every boxed subformula B of the payload has □B→B true
};

struct FrameProperty {
  FrameTag tag;
  std::optional<Formula> formula;

  FrameProperty(FrameTag t) : tag(t) {}
  static FrameProperty sound_for(Formula a) {
    FrameProperty p(FrameTag::SoundFor);
    p.formula = a;
    return p;
  }
};

// Structural invariants of the model type itself.
bool check_model(const KripkeModel& m);

// Intuitionistic forcing: implication quantifies over ≼-successors, box over
// ⊏-successors. Throws std::out_of_range for an unknown node.
bool force(const KripkeModel& m, NodeId node, Formula a);

// Local truth evaluates connectives truth-functionally at the node; a boxed
// body must be forced at every ⊏-successor. The optional assignment replaces
// the node's own atoms (and only them) before evaluating.
bool local_truth(const KripkeModel& m, NodeId node, Formula a,
                 const std::optional<BooleanAssignment>& override = {});

// Classical truth: like local truth, but boxes recurse classically into the
// ⊏-successors, so ≼ is never consulted.
bool classical_truth(const KripkeModel& m, NodeId node, Formula a,
                     const std::optional<BooleanAssignment>& override = {});

// Decides a frame property by its definition. Node-local properties
// (Classical, QuasiClassical, Complete, AtomComplete, SubBranching, SoundFor)
// check the single node when one is given and every node otherwise; SoundFor
// requires the node argument and throws std::invalid_argument without it.
bool check_frame(const KripkeModel& m, const FrameProperty& prop,
                 std::optional<NodeId> at = {});

// Adds one fresh node that duplicates the chosen node from beneath: it keeps
// the same atoms, ≼-reaches exactly what the node ≼-reaches, ⊏-reaches the
// node itself plus everything the node ⊏-reaches, and is reached by nothing.
// Evaluating a box at the fresh node therefore re-examines the original node
// from outside. Returns the extended model and the fresh node's id.
std::pair<KripkeModel, NodeId> smorynski_extend(const KripkeModel& m,
                                                NodeId node);

// Cuts ≼ down so every ⊏-accessible node relates only to itself, turning the
// whole successor region classical; ⊏ and the valuation stay untouched.
KripkeModel tilde(const KripkeModel& m);

// Path unraveling rooted at the given node.
struct Unraveling {
  KripkeModel model;
  // last[r] is the original node a path node r ends in.
  std::vector<NodeId> last;
};

// Rebuilds the model as the tree of step sequences from the root, where each
// step follows strict ≼ or ⊏. A path ≼-reaches its extensions whose endpoints
// it ≼-reaches, and ⊏-reaches extensions containing a ⊏ step. Forcing at a
// path equals forcing at its endpoint. With force_branching, every ⊏ step is
// emitted twice so no node keeps exactly one immediate ⊏ successor. Requires
// every node reachable from the root; throws std::invalid_argument otherwise,
// ResourceError if the path tree explodes.
Unraveling unravel_traced(const KripkeModel& m, NodeId root,
                          bool force_branching = false);
KripkeModel unravel(const KripkeModel& m, NodeId root,
                    bool force_branching = false);

// Deterministic seeded sampler: grows a random tree with typed edges, closes
// the relations, and repairs the valuation until the requested properties
// hold, re-checked through check_frame. Throws UnsupportedError when the
// request keeps failing (1000 attempts).
KripkeModel generate_random(const std::vector<FrameProperty>& frame_class,
                            int max_nodes,
                            const std::vector<std::string>& atoms,
                            unsigned long long seed);

// Countermodel serializations; byte-stable for identical inputs.
std::string to_json(const KripkeModel& m, NodeId designated,
                    const Formula& formula,
                    const std::vector<std::string>& frame_class);
std::string to_dot(const KripkeModel& m);

}  // namespace provlog
