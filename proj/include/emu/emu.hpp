#pragma once

#include "emu/cone.hpp"
#include "emu/counterexample.hpp"
#include "emu/measure.hpp"
#include "emu/preference.hpp"
