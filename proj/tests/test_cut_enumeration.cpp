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

#include <tlgkit/bench_io.hpp>
#include <tlgkit/cut_enumeration.hpp>
#include <tlgkit/simulation.hpp>

#include <sstream>

using namespace tlgkit;

namespace
{

/*! Checks that every cut function reproduces its node on all assignments. */
void check_cut_functions( const Aig& aig, const std::vector<std::vector<Cut>>& cuts )
{
  REQUIRE( aig.num_pis() <= 6 );
  std::vector<uint64_t> words( aig.num_pis() );
  for ( uint32_t i = 0; i < aig.num_pis(); ++i )
  {
    words[i] = simulation_pattern( i, 0 );
  }
  const auto values = aig.simulate_words( words );
  const uint64_t lanes = uint64_t( 1 ) << aig.num_pis();

  for ( uint32_t n = 1; n < aig.num_nodes(); ++n )
  {
    for ( const auto& cut : cuts[n] )
    {
      REQUIRE( cut.function.num_vars() == static_cast<int>( cut.leaves.size() ) );
      for ( uint64_t lane = 0; lane < lanes; ++lane )
      {
        uint32_t minterm = 0;
        for ( size_t l = 0; l < cut.leaves.size(); ++l )
        {
          if ( ( values[cut.leaves[l]] >> lane ) & 1u )
          {
            minterm |= 1u << l;
          }
        }
        const bool node_value = ( values[n] >> lane ) & 1u;
        REQUIRE( cut.function.bit( minterm ) == node_value );
      }
    }
  }
}

} // namespace

TEST_CASE( "inputs have exactly their trivial cut" )
{
  Aig aig;
  aig.add_input( "a" );
  const auto cuts = enumerate_cuts( aig );
  REQUIRE( cuts[1].size() == 1 );
  CHECK( cuts[1][0].is_trivial_for( 1 ) );
  CHECK( cuts[1][0].function == TruthTable::nth_var( 1, 0 ) );
}

TEST_CASE( "a lone AND node yields the two-leaf cut and the trivial cut" )
{
  Aig aig;
  const auto a = aig.add_input( "a" );
  const auto b = aig.add_input( "b" );
  const auto y = aig.and2( a, b );
  aig.add_output( "y", y );

  const auto cuts = enumerate_cuts( aig );
  const auto node = Aig::lit_node( y );
  REQUIRE( cuts[node].size() == 2 );
  CHECK( cuts[node][0].leaves == std::vector<uint32_t>{ 1, 2 } );
  CHECK( cuts[node][0].function == TruthTable::from_bits( 2, 0x8 ) );
  CHECK( cuts[node][1].is_trivial_for( node ) );
}

TEST_CASE( "complemented fanins complement the cut function" )
{
  Aig aig;
  const auto a = aig.add_input( "a" );
  const auto b = aig.add_input( "b" );
  const auto y = aig.and2( Aig::lit_not( a ), b ); // !a & b
  aig.add_output( "y", y );

  const auto cuts = enumerate_cuts( aig );
  const auto node = Aig::lit_node( y );
  CHECK( cuts[node][0].function == TruthTable::from_bits( 2, 0x4 ) );
}

TEST_CASE( "a balanced four-way AND enumerates all sub-cuts" )
{
  Aig aig;
  std::vector<Aig::literal> lits;
  for ( int i = 0; i < 4; ++i )
  {
    lits.push_back( aig.add_input( "x" + std::to_string( i ) ) );
  }
  const auto y = aig.and_n( lits );
  aig.add_output( "y", y );

  const auto cuts = enumerate_cuts( aig );
  const auto node = Aig::lit_node( y );

  // {left,right}, {a,b,right}, {left,c,d}, {a,b,c,d}, and the trivial cut
  CHECK( cuts[node].size() == 5 );
  bool found_inputs_cut = false;
  for ( const auto& c : cuts[node] )
  {
    if ( c.leaves == std::vector<uint32_t>{ 1, 2, 3, 4 } )
    {
      found_inputs_cut = true;
      CHECK( c.function == ( TruthTable::nth_var( 4, 0 ) & TruthTable::nth_var( 4, 1 ) &
                             TruthTable::nth_var( 4, 2 ) & TruthTable::nth_var( 4, 3 ) ) );
    }
  }
  CHECK( found_inputs_cut );
  check_cut_functions( aig, cuts );
}

TEST_CASE( "cut size limits the number of leaves" )
{
  Aig aig;
  std::vector<Aig::literal> lits;
  for ( int i = 0; i < 6; ++i )
  {
    lits.push_back( aig.add_input( "x" + std::to_string( i ) ) );
  }
  aig.add_output( "y", aig.and_n( lits ) );

  CutParams ps;
  ps.cut_size = 3;
  const auto cuts = enumerate_cuts( aig, ps );
  for ( uint32_t n = 1; n < aig.num_nodes(); ++n )
  {
    for ( const auto& c : cuts[n] )
    {
      CHECK( c.leaves.size() <= 3 );
    }
  }
  check_cut_functions( aig, cuts );
}

TEST_CASE( "per-node cut count respects the limit and keeps the trivial cut" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
INPUT(c)
INPUT(d)
INPUT(e)
OUTPUT(y)
t1 = XOR(a, b)
t2 = XOR(t1, c)
t3 = XOR(t2, d)
y = XOR(t3, e)
)" );
  const auto aig = to_aig( parse_bench( in ) );

  CutParams ps;
  ps.cut_limit = 4;
  const auto cuts = enumerate_cuts( aig, ps );
  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    CHECK( cuts[n].size() <= 4 );
    CHECK( cuts[n].back().is_trivial_for( n ) );
  }
  check_cut_functions( aig, cuts );
}

TEST_CASE( "no cut dominates another within a node" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
INPUT(c)
INPUT(d)
OUTPUT(y)
OUTPUT(z)
t1 = AND(a, b)
t2 = OR(t1, c)
y = XOR(t2, d)
z = NAND(t1, t2)
)" );
  const auto aig = to_aig( parse_bench( in ) );
  const auto cuts = enumerate_cuts( aig );

  for ( uint32_t n = aig.num_pis() + 1; n < aig.num_nodes(); ++n )
  {
    for ( size_t i = 0; i < cuts[n].size(); ++i )
    {
      for ( size_t j = 0; j < cuts[n].size(); ++j )
      {
        if ( i == j || cuts[n][j].is_trivial_for( n ) || cuts[n][i].is_trivial_for( n ) )
        {
          continue;
        }
        if ( cuts[n][j].leaves.size() < cuts[n][i].leaves.size() )
        {
          CHECK_FALSE( detail::leaves_subset( cuts[n][j].leaves, cuts[n][i].leaves ) );
        }
      }
    }
  }
  check_cut_functions( aig, cuts );
}

TEST_CASE( "cut functions are exact on an irregular circuit" )
{
  std::istringstream in( R"(
INPUT(a)
INPUT(b)
INPUT(c)
INPUT(d)
INPUT(e)
INPUT(f)
OUTPUT(y)
t1 = NAND(a, b)
t2 = NOR(c, d)
t3 = XOR(t1, t2)
t4 = AND(t3, e)
t5 = OR(t4, f)
y = XNOR(t5, t1)
)" );
  const auto aig = to_aig( parse_bench( in ) );
  const auto cuts = enumerate_cuts( aig );
  check_cut_functions( aig, cuts );
}

TEST_CASE( "parameters are validated" )
{
  Aig aig;
  aig.add_input( "a" );
  CutParams bad;
  bad.cut_size = 1;
  CHECK_THROWS_AS( enumerate_cuts( aig, bad ), std::invalid_argument );
  bad.cut_size = 9;
  CHECK_THROWS_AS( enumerate_cuts( aig, bad ), std::invalid_argument );
  bad.cut_size = 4;
  bad.cut_limit = 1;
  CHECK_THROWS_AS( enumerate_cuts( aig, bad ), std::invalid_argument );
}
