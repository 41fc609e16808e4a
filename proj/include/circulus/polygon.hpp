#pragma once

#include <cstddef>
#include <vector>

#include "circulus/enclosure.hpp"

namespace circulus {

/// Regular n-gon data. Perimeters are for a circle of unit diameter (so they
/// bracket pi directly), areas for a circle of unit radius.
struct PolygonRung {
  long n = 0;
  Enclosure insc;       // C_n = n sin(pi/n)
  Enclosure circ;       // C'_n = n tan(pi/n)
  Enclosure insc_area;  // A_n = (n/2) sin(2 pi/n)
  Enclosure circ_area;  // A'_n = n tan(pi/n)
};

/// Rungs n0, 2 n0, 4 n0, ... produced by side doubling.
class PolygonLadder {
 public:
  PolygonLadder(int seed_sides, std::vector<PolygonRung> rungs, bool trig_seeded);

  int seed_sides() const { return seed_sides_; }
  /// True when the rungs come from trig closed forms rather than doubling.
  bool trig_seeded() const { return trig_seeded_; }
  std::size_t size() const { return rungs_.size(); }
  /// Throws IndexError for a missing rung.
  const PolygonRung& rung(std::size_t k) const;
  const std::vector<PolygonRung>& rungs() const { return rungs_; }

 private:
  int seed_sides_;
  std::vector<PolygonRung> rungs_;
  bool trig_seeded_;
};

/// Exact or square-root seeds for n0 in {3, 4, 6}; throws UnsupportedSeed.
PolygonRung seed(int n0, Precision p);

/// The 2n rung: C'_2n = 2 C'_n C_n / (C'_n + C_n), C_2n = sqrt(C'_2n C_n).
PolygonRung double_sides(const PolygonRung& r);

/// Rung built directly from n sin(pi/n) and n tan(pi/n) through the
/// trig enclosures; used where doubling cannot reach (30-gon).
PolygonRung trig_rung(long n, Precision p);

/// Rungs 0..k. Seeds 3, 4 and 6 double; seed 30 builds every rung from
/// the trig closed forms.
PolygonLadder ladder(int n0, int k, Precision p);

struct ChordSine {
  Enclosure b;  // C_2n / 2n: chord of half the arc subtended by a side
  Enclosure c;  // C_n / 2n: sine of that arc
};

/// Chord and sine at rung k >= 1, with n the side count of rung k - 1.
ChordSine chord_sine(const PolygonLadder& l, std::size_t k);

}  // namespace circulus
