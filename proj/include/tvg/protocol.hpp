#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "tvg/graph.hpp"
#include "tvg/reach.hpp"

namespace tvg {

// A content is identified by (source, payload); repeated sends of the same
// content are idempotent.
struct Content {
    NodeId source = -1;
    int payload = 0;
    auto operator<=>(const Content&) const = default;
};

// Authenticity oracle standing in for a digital signature: a token verifies
// exactly when it was minted by the claimed source over the same content.
struct SignatureToken {
    NodeId minted_by = -1;
    Content over;
    auto operator<=>(const SignatureToken&) const = default;
};

inline SignatureToken sign(NodeId signer, const Content& c) { return {signer, c}; }
inline bool verify(const Content& claimed, const SignatureToken& token) {
    return token.minted_by == claimed.source && token.over == claimed;
}

// Authenticated-link tuple (s, c, S): S is the set of nodes the content
// traversed, appended hop by hop by receivers.
struct AlTuple {
    NodeId source = -1;
    int payload = 0;
    std::set<NodeId> traversed;
    auto operator<=>(const AlTuple&) const = default;
};

struct AmTuple {
    NodeId source = -1;
    int payload = 0;
    SignatureToken token;
    auto operator<=>(const AmTuple&) const = default;
};

enum class Variant {
    Alg1,    // multicast on omega/neighbor change (authenticated links)
    Alg2,    // multicast every step (fair-loss / significant computation)
    Alg3Am,  // authenticated messages
};

struct DeliverEvent {
    NodeId process = -1;
    Content content;
};

// One multicast payload: a full copy of the sender's omega.
struct Multicast {
    std::vector<AlTuple> al;
    std::vector<AmTuple> am;
    bool empty() const { return al.empty() && am.empty(); }
    auto operator<=>(const Multicast&) const = default;
};

// Per-process protocol state machine, advanced by the harness.
class ProcessState {
  public:
    ProcessState(NodeId id, Variant variant, int f) : id_(id), variant_(variant), f_(f) {}

    NodeId id() const { return id_; }
    Variant variant() const { return variant_; }
    const std::set<AlTuple>& omega_al() const { return omega_al_; }
    const std::set<AmTuple>& omega_am() const { return omega_am_; }
    bool dirty() const { return dirty_; }
    const std::set<Content>& delivered() const { return delivered_; }

    // Source-side send; self-delivery is immediate.  Duplicate sends are
    // no-ops returning nullopt.
    std::optional<DeliverEvent> rc_send(int payload);

    // One compute step: returns the multicast to emit, if any.
    std::optional<Multicast> compute_phase(int now, const std::set<NodeId>& neighbors_now);

    // Applies one received multicast.  AL tuples gain the sender id; AM
    // tuples are kept only if the authenticity oracle accepts them.
    void on_receive(NodeId sender, const Multicast& msg);

    // Fires the delivery rule; each content is delivered at most once.
    std::vector<DeliverEvent> check_delivery();

  private:
    NodeId id_;
    Variant variant_;
    int f_;
    std::set<AlTuple> omega_al_;
    std::set<AmTuple> omega_am_;
    bool dirty_ = false;
    std::set<NodeId> last_neighbors_;
    std::set<Content> delivered_;

    Multicast snapshot_omega() const;
};

// Adversary behaviors.  SILENT sends nothing; FORGE fabricates tuples for a
// content its source never sent, with traversed sets chosen to look
// well-cut; COLLUDING splits disjoint fabricated sets across the Byzantine
// nodes; REPLAY_DROP relays stored tuples unmodified but suppresses one
// content.
enum class AdversaryKind { None, Silent, Forge, Colluding, ReplayDrop };

struct Adversary {
    AdversaryKind kind = AdversaryKind::None;
    Content target;  // forged content (Forge/Colluding) or suppressed one (ReplayDrop)
};

// Raw tuple store for a Byzantine node: received messages kept verbatim,
// sender ids deliberately not appended.
struct ByzantineStore {
    std::set<AlTuple> al;
    std::set<AmTuple> am;
    void absorb(const Multicast& msg);
};

struct ByzantineView {
    NodeId self = -1;
    int now = 0;
    int n = 0;
    std::set<NodeId> neighbors;
    const std::set<NodeId>* byzantine = nullptr;
    const ByzantineStore* store = nullptr;
    bool am_setting = false;
};

// What a Byzantine node multicasts this step.  The harness enforces the AL
// constraint afterwards: correct receivers append the sender's true id, so
// every fabricated chain carries a Byzantine identifier.  Under AM the
// strategy can only replay or self-sign tokens; tokens for other sources
// never verify.
Multicast byzantine_act(const Adversary& adversary, const ByzantineView& view);

}  // namespace tvg
