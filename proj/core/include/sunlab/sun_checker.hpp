#pragma once
//------------------------------------------------------------------------------
// Solar-point and strict-sun verification in linf.
//
// A nearest point y of an external x is solar when it stays nearest to every
// point of the ray from y through x. The check walks a geometric lambda
// schedule; a violation is exact (the competing nearer point re-verifies),
// a pass is schedule-relative and reported as such.
//
// The supporting-cone criterion gives a second, independent route: the open
// cone at y toward x misses the set iff no primitive reaches a positive
// minimum slack over the active coordinates. Both routes are validated
// against each other by the test suite.
//------------------------------------------------------------------------------
#include <optional>
#include <vector>

#include "sunlab/config.hpp"
#include "sunlab/l1_convexity.hpp"
#include "sunlab/projection.hpp"
#include "sunlab/set_model.hpp"

namespace sunlab {

struct ConeSpec {
  Point y;         // apex (a nearest point)
  Point x;         // query point
  Rational r;      // |x - y|_inf, > 0
  IndexSet active;  // { j : |x_j - y_j| = r }

  ConeSpec(Point y_, Point x_);
};

// Half-space form: strict per-coordinate slacks on the active set.
bool cone_contains(const ConeSpec& spec, const Point& z);

// Definitional form: the segment [y, z] enters the open ball around x.
bool cone_contains_by_definition(const ConeSpec& spec, const Point& z);

struct ConeClearance {
  bool holds = true;
  std::optional<Point> witness;  // a set point strictly inside the cone
};

// Exact decision of "open supporting cone at y misses M".
ConeClearance check_supporting_cone(const SetModel& m, const ConeSpec& spec);

struct SolarVerdict {
  bool solar = false;
  Rational lambda_max_checked;  // when solar: schedule-relative bound
  // violation data (exact):
  Rational lambda;
  Point z;            // the ray point where y stops being nearest
  Rational rho_at_z;  // < |z - y|
  Point competing;    // a strictly nearer set point
};

SolarVerdict is_solar_point(const SetModel& m, const Point& x, const Point& y,
                            const std::vector<Rational>& schedule);

struct SunCheck {
  bool found = false;
  Point witness;                       // a solar nearest point, when found
  std::vector<SolarVerdict> failures;  // per-candidate violations otherwise
};

SunCheck check_sun_at(const SetModel& m, const Point& x, const std::vector<Rational>& schedule);

// Exact check that the whole segment [y, y_hat] lies on the sphere around x
// of radius rho(x, M), sampled at t in {0, 1/4, 1/2, 3/4, 1}.
bool solar_segment_on_sphere(const SetModel& m, const Point& x, const Point& y_hat,
                             const Point& y, const std::vector<Rational>& t_samples = {
                                                  Rational(0), Rational(1, 4), Rational(1, 2),
                                                  Rational(3, 4), Rational(1)});

// One record per external sample point: every nearest-point sample checked
// for solarity, with the cone criterion evaluated alongside.
struct SolarCheckRecord {
  Point x;
  Rational rho;
  struct PerWitness {
    Point y;
    SolarVerdict verdict;
    bool cone_holds;
    std::optional<Point> cone_witness;
  };
  std::vector<PerWitness> checks;
  bool sun_ok = false;     // some candidate is solar
  bool strict_ok = false;  // every candidate is solar
};

struct SweepResult {
  std::vector<SolarCheckRecord> records;
  long cone_holds_but_not_solar = 0;  // soundness counter; must stay 0
  struct SegmentCase {
    Point x, y_hat, y;
    bool ok;
  };
  std::vector<SegmentCase> sphere_segments;  // solar/second-witness pairs

  Verdict sun_verdict() const;
  Verdict strict_sun_verdict() const;
};

// External sample points: characteristic lattice around the set's structure,
// shell of the inflated bounding box, seeded random fill, plus caller extras
// (e.g. points straddling a Menger refutation). Membership-filtered.
std::vector<Point> external_samples(const SetModel& m, const Config& cfg,
                                    const std::vector<Point>& extra = {});

SweepResult sun_sweep(const SetModel& m, const Config& cfg,
                      const std::vector<Point>& extra_candidates = {});

Verdict check_strict_sun(const SetModel& m, const Config& cfg);

}  // namespace sunlab
