#pragma once

#include "rtalt/pafa/pafa.hpp"

namespace rtalt::pafa {

/// PAFA over {1} accepting 1^m iff m is a power of two.
///
/// The existential player writes one certificate symbol per input symbol,
/// "1+" marking halving points. Each marker (and the start) spawns a private
/// checker that reads the certificate at half speed, after a two-symbol
/// delay, and accepts iff the next marker arrives exactly with the right
/// end-marker; a checker spawned with one symbol left accepts outright.
PafaDescription build_upower();

/// PAFA over {0,1,c} accepting wcw.
///
/// A private split on the left end-marker starts two comparators sharing the
/// existential common states: one compares the certificate with the prefix
/// up to c, the other first skips to just after c and compares it with the
/// suffix, reading c against the right end-marker.
PafaDescription build_twin();

/// PA1CA over {1} accepting 1^m iff m is a perfect square (including 0).
///
/// The certificate is split into segments 1^(x-1)#. Private branches check
/// that an arbitrary pair of segments has equal length and that the number
/// of segments equals the length of the first one. The counter is blind:
/// its zero test is read only on the right end-marker.
Pa1caDescription build_usquare_pa1ca();

} // namespace rtalt::pafa
