#pragma once

#include "bernsym/bernoulli.hpp"
#include "bernsym/combinatorics.hpp"
#include "bernsym/identities.hpp"
#include "bernsym/multipoly.hpp"
#include "bernsym/quotients.hpp"
#include "bernsym/rational.hpp"
#include "bernsym/series.hpp"
#include "bernsym/unipoly.hpp"
