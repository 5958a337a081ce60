#include "fock/common.hpp"
