#ifndef STALLINGS_STALLINGS_HPP_
#define STALLINGS_STALLINGS_HPP_

#include "stallings/automaton.hpp"
#include "stallings/errors.hpp"
#include "stallings/freefactor.hpp"
#include "stallings/io.hpp"
#include "stallings/oracle.hpp"
#include "stallings/words.hpp"

#endif  // STALLINGS_STALLINGS_HPP_
