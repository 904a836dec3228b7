#include "tvg/protocol.hpp"

#include <algorithm>
#include <map>

namespace tvg {

std::optional<DeliverEvent> ProcessState::rc_send(int payload) {
    Content c{id_, payload};
    if (delivered_.count(c)) return std::nullopt;  // duplicate send: idempotent
    if (variant_ == Variant::Alg3Am) {
        omega_am_.insert(AmTuple{id_, payload, sign(id_, c)});
    } else {
        omega_al_.insert(AlTuple{id_, payload, {}});
    }
    dirty_ = true;
    delivered_.insert(c);
    return DeliverEvent{id_, c};
}

Multicast ProcessState::snapshot_omega() const {
    Multicast m;
    m.al.assign(omega_al_.begin(), omega_al_.end());
    m.am.assign(omega_am_.begin(), omega_am_.end());
    return m;
}

std::optional<Multicast> ProcessState::compute_phase(int now, const std::set<NodeId>& neighbors_now) {
    (void)now;
    bool neighbors_changed = neighbors_now != last_neighbors_;
    bool emit = variant_ == Variant::Alg2 ? true : (dirty_ || neighbors_changed);
    dirty_ = false;
    last_neighbors_ = neighbors_now;
    if (!emit) return std::nullopt;
    return snapshot_omega();
}

void ProcessState::on_receive(NodeId sender, const Multicast& msg) {
    if (variant_ == Variant::Alg3Am) {
        for (const auto& t : msg.am) {
            if (!verify(Content{t.source, t.payload}, t.token)) continue;
            if (omega_am_.insert(t).second) dirty_ = true;
        }
        return;
    }
    for (const auto& t : msg.al) {
        AlTuple stored = t;
        stored.traversed.insert(sender);
        if (omega_al_.insert(stored).second) dirty_ = true;
    }
}

std::vector<DeliverEvent> ProcessState::check_delivery() {
    std::vector<DeliverEvent> events;
    if (variant_ == Variant::Alg3Am) {
        for (const auto& t : omega_am_) {
            Content c{t.source, t.payload};
            if (delivered_.count(c)) continue;
            delivered_.insert(c);
            events.push_back(DeliverEvent{id_, c});
        }
        return events;
    }

    // Group the stored traversed sets by content; only tuples whose set
    // contains the source count (rule 3's (s, c, S_x u {s}) form).
    std::map<Content, NodeSetFamily> families;
    for (const auto& t : omega_al_) {
        Content c{t.source, t.payload};
        if (c.source == id_ || delivered_.count(c)) continue;
        if (!t.traversed.count(t.source)) continue;
        std::set<NodeId> rest = t.traversed;
        rest.erase(t.source);
        families[c].push_back(std::move(rest));
    }
    for (auto& [c, family] : families) {
        if (min_hitting_set(family).size.exceeds(f_)) {
            delivered_.insert(c);
            events.push_back(DeliverEvent{id_, c});
        }
    }
    return events;
}

void ByzantineStore::absorb(const Multicast& msg) {
    al.insert(msg.al.begin(), msg.al.end());
    am.insert(msg.am.begin(), msg.am.end());
}

Multicast byzantine_act(const Adversary& adversary, const ByzantineView& view) {
    Multicast out;
    switch (adversary.kind) {
        case AdversaryKind::None:
        case AdversaryKind::Silent:
            return out;

        case AdversaryKind::Forge: {
            if (view.am_setting) {
                // No valid token for a correct source can exist; this is
                // exactly what the receivers must reject.
                out.am.push_back(AmTuple{adversary.target.source, adversary.target.payload,
                                         sign(view.self, adversary.target)});
                return out;
            }
            for (NodeId x = 0; x < view.n; ++x) {
                if (x == adversary.target.source) continue;
                out.al.push_back(AlTuple{adversary.target.source, adversary.target.payload,
                                         {adversary.target.source, x}});
            }
            return out;
        }

        case AdversaryKind::Colluding: {
            if (view.am_setting) {
                out.am.push_back(AmTuple{adversary.target.source, adversary.target.payload,
                                         sign(view.self, adversary.target)});
                return out;
            }
            // Fabricated traversed sets are partitioned round-robin across
            // the Byzantine nodes so the apparent journeys look disjoint.
            std::vector<NodeId> byz(view.byzantine->begin(), view.byzantine->end());
            int rank = static_cast<int>(
                std::find(byz.begin(), byz.end(), view.self) - byz.begin());
            int m = static_cast<int>(byz.size());
            int i = 0;
            for (NodeId x = 0; x < view.n; ++x) {
                if (x == adversary.target.source || view.byzantine->count(x)) continue;
                if (i % m == rank)
                    out.al.push_back(AlTuple{adversary.target.source, adversary.target.payload,
                                             {adversary.target.source, x}});
                ++i;
            }
            return out;
        }

        case AdversaryKind::ReplayDrop: {
            for (const auto& t : view.store->al)
                if (Content{t.source, t.payload} != adversary.target) out.al.push_back(t);
            for (const auto& t : view.store->am)
                if (Content{t.source, t.payload} != adversary.target) out.am.push_back(t);
            return out;
        }
    }
    return out;
}

}  // namespace tvg
