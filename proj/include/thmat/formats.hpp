#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "thmat/dense.hpp"
#include "thmat/displacement.hpp"
#include "thmat/poly.hpp"

// ASCII interchange formats. Every parse failure is Error(Errc::Parse).
//
// SMX (structured):           DMX (dense):
//   SMX 1                       DMX 1
//   field <p>                   field <p>
//   size <n>                    size <n>
//   tpart <aT>                  n rows of n residues
//   aT G columns, aT H columns
//   hpart <aH>
//   aH G columns, aH H columns
//
// Polynomial line: residues low to high degree; an empty line is zero.
namespace thmat::formats {

std::string write_smx(const THMatrix& a);
THMatrix read_smx(std::string_view text);

std::string write_dmx(const DenseMatrix& a);
DenseMatrix read_dmx(std::string_view text);

// Without trailing newline.
std::string write_poly_line(const Poly& p);
Poly read_poly_line(const PrimeField& f, std::string_view line);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace thmat::formats
