#pragma once

#include <string>
#include <vector>

#include "losim/distribution.hpp"
#include "losim/numerics.hpp"
#include "losim/oracle.hpp"
#include "losim/sampling.hpp"
#include "losim/transition.hpp"
#include "losim/wigner.hpp"

namespace losim {

/// All emitters write floats with 17 significant digits (lossless double
/// round-trip) and fixed key order, so identical inputs produce identical
/// bytes.
std::string format_double(double v);

std::string matrix_to_json(const UnitaryMatrix& u);
UnitaryMatrix matrix_from_json(const std::string& text);

std::string distribution_to_json(const OutputDistribution& dist);
OutputDistribution distribution_from_json(const std::string& text);
std::string distribution_to_csv(const OutputDistribution& dist);

std::string sectors_to_json(const SectorDecomposition& dec);
SectorDecomposition sectors_from_json(const std::string& text);
std::string sectors_to_csv(const SectorDecomposition& dec);

std::string batch_to_json(const SampleBatch& batch, std::size_t m);
SampleBatch batch_from_json(const std::string& text);
std::string batch_to_csv(const SampleBatch& batch, std::size_t m);

std::string grid_to_csv(const WignerGrid& grid);
std::string grid_to_json(const WignerGrid& grid);
std::string slice_to_csv(const std::vector<std::pair<double, double>>& slice);

std::string sweep_to_csv(const std::vector<RegimeReport>& reports);

/// Debug dump: occupation tuple → amplitude for every nonzero entry.
std::string state_to_json(const TruncatedState& state);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace losim
