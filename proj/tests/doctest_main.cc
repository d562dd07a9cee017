/** @file doctest_main.cc
 *  doctest entry point.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
