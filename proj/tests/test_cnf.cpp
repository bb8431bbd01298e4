/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

#include <catch2/catch_amalgamated.hpp>

#include <tlgkit/cnf.hpp>

#include <sstream>

using namespace tlgkit;

TEST_CASE( "variables are allocated once per signal" )
{
  CnfFormula f;
  const int a = f.var( "a" );
  const int b = f.var( "b" );
  CHECK( a == 1 );
  CHECK( b == 2 );
  CHECK( f.var( "a" ) == a );
  CHECK( f.num_vars == 2 );
  CHECK( f.var_of( "b" ) == b );
  CHECK_THROWS_AS( f.var_of( "missing" ), std::out_of_range );

  const int t = f.new_var();
  CHECK( t == 3 );
  CHECK( f.num_vars == 3 );
}

TEST_CASE( "clauses are validated on insertion" )
{
  CnfFormula f;
  f.var( "a" );
  f.var( "b" );
  f.add_clause( { 1, -2 } );
  CHECK( f.num_clauses() == 1 );
  CHECK_THROWS_AS( f.add_clause( {} ), std::invalid_argument );
  CHECK_THROWS_AS( f.add_clause( { 0 } ), std::out_of_range );
  CHECK_THROWS_AS( f.add_clause( { 3 } ), std::out_of_range );
  CHECK_THROWS_AS( f.add_clause( { -5 } ), std::out_of_range );
}

TEST_CASE( "the DIMACS writer produces the standard layout" )
{
  CnfFormula f;
  f.var( "x" );
  f.var( "y" );
  f.var( "z" );
  f.add_clause( { 1, -2, 3 } );
  f.add_clause( { -1 } );

  std::ostringstream out;
  write_dimacs( f, out );
  CHECK( out.str() == "p cnf 3 2\n1 -2 3 0\n-1 0\n" );
}
