#include "collar/helmholtz/io.hpp"

#include "collar/format.hpp"

namespace collar::helmholtz {

void write_radial_csv(std::ostream& out, const RadialGridFunction& w) {
    out << "r,re,im\n";
    for (std::size_t i = 0; i < w.r.size(); ++i) {
        out << fmt_g9(w.r[i]) << ',' << fmt_g9(w.values[i].real()) << ','
            << fmt_g9(w.values[i].imag()) << '\n';
    }
}

std::string bc_name(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

void write_mode_json(std::ostream& out, ModeIndex mode, double lambda,
                     const AnnulusSpec& spec, BoundaryCondition bc,
                     const ModeResiduals& res) {
    out << "{\n";
    out << "  \"l\": " << mode.l << ",\n";
    out << "  \"lambda\": " << fmt_g17(lambda) << ",\n";
    out << "  \"alpha\": " << fmt_g17(spec.alpha) << ",\n";
    out << "  \"bc\": \"" << bc_name(bc) << "\",\n";
    out << "  \"nodes\": " << spec.nodes.size() << ",\n";
    out << "  \"collar_width\": " << fmt_g17(spec.width()) << ",\n";
    out << "  \"residual_boundary\": " << fmt_g17(res.boundary) << ",\n";
    out << "  \"residual_neumann\": " << fmt_g17(res.neumann) << ",\n";
    out << "  \"residual_pde\": " << fmt_g17(res.pde) << "\n";
    out << "}\n";
}

} // namespace collar::helmholtz
