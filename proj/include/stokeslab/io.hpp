#pragma once

#include "stokeslab/io/branch_io.hpp"
#include "stokeslab/io/csv.hpp"
#include "stokeslab/io/export.hpp"
#include "stokeslab/io/files.hpp"
#include "stokeslab/io/report.hpp"
#include "stokeslab/io/run.hpp"
