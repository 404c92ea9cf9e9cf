#pragma once
// rns.hpp - Umbrella header for the residue number system library.

#include "rns/crt_table.hpp"
#include "rns/modulus.hpp"
#include "rns/natbig.hpp"
#include "rns/reconstruct.hpp"
#include "rns/residue_int.hpp"
