#pragma once

#include "csc/qmatrix.hpp"
#include "csc/rat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csc {

/// One Legendrian component of a contact surgery diagram. `coeff` is the
/// contact surgery coefficient, measured against the contact framing.
/// `stabilizations` records how many stabilizations the bookkeeping applied
/// when the component was produced by a reduction (0 for user input).
struct LegendrianComponent {
    std::string id;
    std::int64_t tb = 0;
    std::int64_t rot = 0;
    Rat coeff;
    int stabilizations = 0;
};

/// Ambient handle data plus Legendrian components and their topological
/// linking numbers (diagonal of `linking` is ignored).
struct ContactDiagram {
    int one_handles = 0;
    std::vector<LegendrianComponent> components;
    IntSymMatrix linking;
};

/// Diagram with every contact coefficient reduced to +1 or -1.
/// provenance[k] is the id of the original component that component k of
/// `diagram` came from.
struct ReducedDiagram {
    ContactDiagram diagram;
    int q_count = 0;
    std::vector<std::string> provenance;
};

/// Intersection data of the 4-manifold carried by a reduced diagram.
struct FourManifoldData {
    IntSymMatrix Q;
    std::vector<std::int64_t> c1_vec; // rotation numbers in basis order
    std::int64_t chi = 0;
    Inertia inertia;
    int q_count = 0;
};

/// How the chain knots of a negative continued-fraction expansion link one
/// another. `Chain`: each knot is a push-off of the previous one, so later
/// knots inherit the earlier linkings (the convention selected by the
/// d3 cross-check oracle, and the library default). `Parallel`: every chain
/// knot links its siblings like a push-off of the original component.
enum class ChainConvention { Chain, Parallel };

/// Smooth surgery framing of a component: tb + contact coefficient.
Rat smooth_framing(const LegendrianComponent& c);

/// Result of reducing one component: the replacement components, their
/// internal linking numbers, and the number of (+1)-coefficients among
/// them. Every part links third components exactly as the original did
/// (push-offs inherit external linkings; stabilization changes none).
struct ComponentExpansion {
    std::vector<LegendrianComponent> parts;
    IntSymMatrix internal_linking;
    int q_count = 0;
};

/// Replaces one component by components with coefficients +-1:
///   +1, -1          -> unchanged
///   r <= -1         -> Legendrian surgery chain driven by the negative
///                      continued fraction of r - 1
///   1/2, p/(p+1)    -> two (+1)-surgeries on push-offs, followed (p > 1)
///                      by the chain of the induced -p/(p-1)-surgery
/// `variant` (0 or 1) fixes the sign (-1)^variant of every stabilization.
/// Throws UnsupportedCoefficient for any other coefficient.
ComponentExpansion reduce_component(const LegendrianComponent& c, int variant,
                                    ChainConvention conv = ChainConvention::Chain);

/// Applies reduce_component to every component and reassembles the linking
/// matrix: parts of different originals link via the original linking
/// number, parts of the same original via the expansion's internal linking.
ReducedDiagram reduce_diagram(const ContactDiagram& d, int variant,
                              ChainConvention conv = ChainConvention::Chain);

/// Intersection form, c1 vector (rotation numbers), Euler characteristic
/// and inertia of the 4-manifold traced by a (+-1)-diagram.
FourManifoldData build_four_manifold(const ReducedDiagram& rd, int one_handles);

} // namespace csc
