#pragma once

#include <string>

#include <json.hpp>

#include "walktransfer/graph.hpp"
#include "walktransfer/pgst.hpp"
#include "walktransfer/quotient.hpp"
#include "walktransfer/spectral.hpp"
#include "walktransfer/transfer.hpp"

namespace wt {

using Json = nlohmann::ordered_json;

/// {"n": int, "edges": [[i, j, w], ...], "potential": [...]} with i < j and
/// no repeated pair; "potential" may be omitted. Throws DomainError.
WeightedGraph graph_from_json(const Json& j);
Json graph_to_json(const WeightedGraph& g);
WeightedGraph read_graph_file(const std::string& path);

/// {"cells": [[...], ...]} or a bare array of cells.
Cells cells_from_json(const Json& j);
Cells read_cells_file(const std::string& path);

Json complex_to_json(Complex z);
Json to_json(const TransferWitness& w);
/// Eigenvalues with multiplicities (rounded projector traces), projectors on request.
Json to_json(const SpectralDecomposition& dec, bool with_projectors);
Json to_json(const FidelityTrace& trace, bool with_samples);
Json to_json(const PhasePattern& pattern);
Json to_json(const NoPgstCertificate& cert);
Json to_json(const NoPgstReport& report);
Json to_json(const Evidence& e);
/// verdict and exists as "yes" / "no"; evidence.pst_time is the first exact
/// PST witness time, when there is one.
Json to_json(const CycleVerdict& v);
Json to_json(const KrylovReport& r);
Json to_json(const ComplementTransportReport& r);
Json to_json(const CoverEquivalenceReport& r);
Json to_json(const BlockIdentityReport& r);
Json to_json(const EquitablePartition& part);
Json to_json(const IntertwinerReport& r);
Json to_json(const PathSuiteRow& row);
Json matrix_to_json(const Matrix& m);
Json matrix_to_json(const CMatrix& m);

}  // namespace wt
