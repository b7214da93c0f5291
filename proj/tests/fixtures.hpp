#pragma once

// Inputs shared by several suites.

#include "sdc/io.hpp"

#ifndef SDC_DATA_DIR
#define SDC_DATA_DIR "paper-data"
#endif

namespace fixture {

inline const char* data_dir() { return SDC_DATA_DIR; }

inline sdc::ConstructionSpec length60_spec() {
    return sdc::parse_construction_spec("p=5\nring=F2U\nq=uuu,uu1,1u0\na=uuuu0,u00u1,u33u0\n");
}

}  // namespace fixture
