#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "rrlab/groebner.hpp"

int main(int argc, char** argv) {
    // every basis computed anywhere in the unit suite re-verifies its
    // S-vectors
    rrlab::engine_options().self_check = true;
    return doctest::Context(argc, argv).run();
}
