#include "bps/sequence.hpp"

namespace bps {

SequenceKind kind_from_name(std::string_view name) {
    for (SequenceKind k : {SequenceKind::local_gw, SequenceKind::local_bps,
                           SequenceKind::relative_gw, SequenceKind::relative_bps,
                           SequenceKind::curve_counts}) {
        if (name == kind_name(k)) return k;
    }
    throw std::invalid_argument("unknown sequence kind: " + std::string(name));
}

}  // namespace bps
