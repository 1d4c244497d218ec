#ifndef LATPOLY_LATPOLY_HPP
#define LATPOLY_LATPOLY_HPP

#include "latpoly/characterization.hpp"
#include "latpoly/closure.hpp"
#include "latpoly/config.hpp"
#include "latpoly/error.hpp"
#include "latpoly/function_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/lattice_io.hpp"
#include "latpoly/monotone.hpp"
#include "latpoly/normal_form.hpp"
#include "latpoly/report.hpp"
#include "latpoly/table_io.hpp"
#include "latpoly/term.hpp"
#include "latpoly/term_parser.hpp"
#include "latpoly/verify.hpp"

#endif  // LATPOLY_LATPOLY_HPP
