#pragma once

namespace bcr {

// Sign constants for rules that are reconstructions. Every table and report
// records them in its header so results are self-describing.

/// Overall sign of the two-term chord relation: D1 + kChordRowSign * D2 = 0.
inline constexpr int kChordRowSign = 1;

/// IHX rows are emitted as I + kIhxSideSign * (H + X), with H and X obtained
/// by exchanging one leg of each end of the middle edge.
inline constexpr int kIhxSideSign = 1;

/// Odd-case orientation: sign of the vertex relabeling times (-1) per
/// reversed edge.
inline constexpr const char* kOddConvention = "vertex-perm*edge-reversals";

}  // namespace bcr
