#ifndef ABELREG_ABELREG_HPP
#define ABELREG_ABELREG_HPP

// Umbrella header for the whole library.

#include <abelreg/rational.hpp>
#include <abelreg/matrix.hpp>
#include <abelreg/polynomial.hpp>
#include <abelreg/linalg.hpp>
#include <abelreg/nsmodel.hpp>
#include <abelreg/regularity.hpp>
#include <abelreg/bundles.hpp>
#include <abelreg/catalogs.hpp>
#include <abelreg/oracle.hpp>
#include <abelreg/modelzoo.hpp>
#include <abelreg/io.hpp>

#endif
