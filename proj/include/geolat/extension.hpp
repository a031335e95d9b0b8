#pragma once

// Modular cuts and one-point extensions.

#include <string_view>
#include <variant>
#include <vector>

#include "geolat/lattice_core.hpp"

namespace geolat {

// Members are flats of a host geometry, stored as sorted masks in the host's
// point indexing.
struct ModularCut {
  std::vector<Mask> members;

  bool contains(Mask flat) const;
  friend bool operator==(const ModularCut&, const ModularCut&) = default;
};

struct Principal {
  Flat generator;
};

struct Explicit {
  std::vector<Flat> members;
};

using CutSpec = std::variant<Principal, Explicit>;

class NotModularClosedError : public Error {
 public:
  NotModularClosedError(Flat a, Flat b)
      : Error(ErrorKind::NotModularClosed,
              "modular pair " + a.str() + ", " + b.str() + " has its meet outside the cut"),
        a_(std::move(a)),
        b_(std::move(b)) {}

  const Flat& first() const { return a_; }
  const Flat& second() const { return b_; }

 private:
  Flat a_;
  Flat b_;
};

ModularCut resolve_cut(const Geometry& g, const CutSpec& spec);

// Upward closure of the generators, then validated.
ModularCut generated_cut(const Geometry& g, const std::vector<Flat>& generators);
ModularCut generated_cut(const Geometry& g, const std::vector<Mask>& generators);

// {x : a ⊆ x}; a must have rank at least 2.
ModularCut principal_cut(const Geometry& g, Mask a);

// Throws on the first violated cut invariant.
void validate_cut(const Geometry& g, const ModularCut& c);

// The meet of all members when the cut is principal.
std::optional<Mask> principal_generator(const Geometry& g, const ModularCut& c);
bool is_principal(const Geometry& g, const ModularCut& c);

std::vector<Flat> cut_flats(const Geometry& g, const ModularCut& c);

struct PointCut {
  Geometry rest;
  ModularCut cut;  // in rest's indexing; empty when p is a coloop
};

PointCut cut_of_point(const Geometry& g, std::string_view p);

std::vector<Mask> collar(const Geometry& g, const ModularCut& c);

Geometry one_point_extension(const Geometry& g, const ModularCut& c, const PointLabel& p);
Geometry principal_extension(const Geometry& g, const Flat& a, const PointLabel& p);
Geometry principal_extension(const Geometry& g, Mask a, const PointLabel& p);

// Same result without the lattice post-check, for bulk enumeration whose
// outputs are compared against each other anyway.
Geometry principal_extension_unchecked(const Geometry& g, Mask a, const PointLabel& p);

std::vector<ModularCut> enumerate_modular_cuts(const Geometry& g);

// First label of the form prefix0, prefix1, ... not used by g.
PointLabel suggest_label(const Geometry& g, std::string_view prefix = "P");

}  // namespace geolat
