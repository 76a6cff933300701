#ifndef COLLAR_HELMHOLTZ_IO_HPP
#define COLLAR_HELMHOLTZ_IO_HPP

#include <ostream>
#include <string>

#include "collar/helmholtz/annulus.hpp"
#include "collar/helmholtz/diagnostics.hpp"
#include "collar/helmholtz/solver.hpp"

namespace collar::helmholtz {

// Columns: r, re, im at %.9g. Header row included.
void write_radial_csv(std::ostream& out, const RadialGridFunction& w);

// Flat JSON object describing one per-mode solve: indices, grid size,
// residual diagnostics. Numeric fields at %.17g.
void write_mode_json(std::ostream& out, ModeIndex mode, double lambda,
                     const AnnulusSpec& spec, BoundaryCondition bc,
                     const ModeResiduals& res);

std::string bc_name(BoundaryCondition bc);

} // namespace collar::helmholtz

#endif
