#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mzeta/lattice.hpp"
#include "mzeta/poly.hpp"

namespace mz {

struct Face {
    int id = -1;
    int dim = 0;
    std::vector<IVec> exponents;  // lattice points of supp(f) on the face, sorted
    std::vector<IVec> vertices;
    std::vector<IVec> normal_rays;  // rays of Gamma^(1) whose face contains this face
    std::vector<int> subfaces;      // ids of all faces of this face, itself included
};

struct Cone {
    std::vector<IVec> generators;
    int face_ref = -1;  // -1 when the relative interior meets a coordinate hyperplane
    bool unimodular = false;
    std::vector<long long> m_values;
    std::vector<long long> s_values;
};

struct NewtonData {
    Poly poly;
    int n = 0;
    std::vector<IVec> support;
    std::vector<IVec> vertices;        // vertices of Gamma_+
    std::vector<Face> faces;           // compact faces, ordered by (dim, exponents)
    std::vector<IVec> generators;      // Gamma^(1)
    std::vector<IVec> generators_pos;  // Gamma^(1)_+
    std::vector<std::vector<IVec>> maximal_cones;  // simplicial maximal cones of the fan
    std::vector<Cone> fan;             // every cone of the fan (all faces of maximal cones)
    bool refined = false;

    const Face& face(int id) const { return faces.at(static_cast<std::size_t>(id)); }
};

IVec to_ivec(const ExpVec& e);
ExpVec to_expvec(const IVec& v);

NewtonData build_newton_polyhedron(const Poly& f);
NewtonData unimodular_refine(const NewtonData& nd);

long long m_f(const NewtonData& nd, const IVec& a);
Rat m_f_rat(const NewtonData& nd, const std::vector<Rat>& a);
// Stored compact face realizing the minimum; nullopt for non-compact faces.
std::optional<int> gamma_f(const NewtonData& nd, const IVec& a);
long long s_of(const IVec& a);
long long h_of(const NewtonData& nd, const IVec& a);

bool is_convenient(const NewtonData& nd);

struct LeadingExponent {
    Rat value;             // L_e(f)
    std::vector<IVec> max_set;  // Gamma^(1)_max
};
LeadingExponent leading_exponent(const NewtonData& nd);

// Position of (1,...,1): -1 interior of Gamma_+, 0 on the Newton boundary,
// +1 outside Gamma_+.
int position_of_ones(const NewtonData& nd);

// Facet with the given primitive normal, or nullopt.
std::optional<int> facet_with_normal(const NewtonData& nd, const IVec& v);

std::string newton_json(const NewtonData& nd, const std::vector<std::string>& vars);

}  // namespace mz
