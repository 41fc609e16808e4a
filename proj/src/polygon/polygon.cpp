#include "circulus/polygon.hpp"

#include <string>

#include "circulus/elementary.hpp"
#include "circulus/errors.hpp"

namespace circulus {

namespace {

// Unit-radius areas from unit-diameter perimeters: cos(pi/n) = C_n / C'_n,
// so A_n = C_n cos(pi/n) = C_n^2 / C'_n and A'_n = C'_n.
PolygonRung with_areas(long n, Enclosure insc, Enclosure circ) {
  Enclosure insc_area = insc.square() / circ;
  Enclosure circ_area = circ;
  return PolygonRung{n, std::move(insc), std::move(circ), std::move(insc_area), std::move(circ_area)};
}

}  // namespace

PolygonLadder::PolygonLadder(int seed_sides, std::vector<PolygonRung> rungs, bool trig_seeded)
    : seed_sides_(seed_sides), rungs_(std::move(rungs)), trig_seeded_(trig_seeded) {}

const PolygonRung& PolygonLadder::rung(std::size_t k) const {
  if (k >= rungs_.size()) throw IndexError("ladder has no rung " + std::to_string(k));
  return rungs_[k];
}

PolygonRung seed(int n0, Precision p) {
  Enclosure sqrt3 = enc_sqrt(Enclosure::point(3, p));
  switch (n0) {
    case 6:
      return with_areas(6, Enclosure::point(3, p), 2 * sqrt3);
    case 4:
      return with_areas(4, enc_sqrt(Enclosure::point(8, p)), Enclosure::point(4, p));
    case 3:
      return with_areas(3, (3 * sqrt3).scaled(-1), 3 * sqrt3);
    default:
      throw UnsupportedSeed(n0);
  }
}

PolygonRung double_sides(const PolygonRung& r) {
  Enclosure circ = (2 * r.circ * r.insc) / (r.circ + r.insc);
  Enclosure insc = enc_sqrt(circ * r.insc);
  return with_areas(2 * r.n, std::move(insc), std::move(circ));
}

PolygonRung trig_rung(long n, Precision p) {
  if (n < 3) throw UnsupportedSeed(static_cast<int>(n));
  Precision w = p.plus(16);
  Enclosure angle = pi_reference(w) / n;
  Enclosure insc = (n * sin(angle)).with_precision(p);
  Enclosure circ = (n * tan(angle)).with_precision(p);
  return with_areas(n, std::move(insc), std::move(circ));
}

PolygonLadder ladder(int n0, int k, Precision p) {
  if (k < 0) throw DomainError("doubling count must be nonnegative");
  std::vector<PolygonRung> rungs;
  rungs.reserve(static_cast<std::size_t>(k) + 1);
  if (n0 == 30) {
    for (int i = 0; i <= k; ++i) rungs.push_back(trig_rung(30L << i, p));
    return PolygonLadder(n0, std::move(rungs), true);
  }
  rungs.push_back(seed(n0, p));
  for (int i = 1; i <= k; ++i) rungs.push_back(double_sides(rungs.back()));
  return PolygonLadder(n0, std::move(rungs), false);
}

ChordSine chord_sine(const PolygonLadder& l, std::size_t k) {
  if (k == 0) throw IndexError("chord_sine needs rung index >= 1");
  const PolygonRung& outer = l.rung(k);
  const PolygonRung& inner = l.rung(k - 1);
  long two_n = 2 * inner.n;
  return ChordSine{outer.insc / two_n, inner.insc / two_n};
}

}  // namespace circulus
