#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "dmr/eval.hpp"
#include "dmr/experiment.hpp"
#include "dmr/sampler.hpp"
#include "dmr/special_functions.hpp"
#include "dmr/synth.hpp"
#include "dmr/trainer.hpp"

namespace {

dmr::Corpus bench_corpus(int topics) {
  dmr::SynthConfig config;
  config.docs = 200;
  config.topics = topics;
  config.vocab = 500;
  config.authors = 8;
  config.doc_len = 100;
  config.seed = 97;
  dmr::EncoderOptions encoder;
  encoder.features = {"authors"};
  encoder.min_papers = 2;
  return dmr::encode_corpus(dmr::generate_synthetic(config).records, encoder);
}

void BM_LogGamma(benchmark::State& state) {
  double x = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmr::log_gamma(x));
    x = x < 1e6 ? x * 1.37 : 1e-3;
  }
}
BENCHMARK(BM_LogGamma);

void BM_Digamma(benchmark::State& state) {
  double x = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmr::digamma(x));
    x = x < 1e6 ? x * 1.37 : 1e-3;
  }
}
BENCHMARK(BM_Digamma);

void BM_LogSumExp(benchmark::State& state) {
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = -0.37 * static_cast<double>(i % 29);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmr::log_sum_exp(values));
  }
}
BENCHMARK(BM_LogSumExp)->Arg(8)->Arg(128);

void BM_GibbsSweep(benchmark::State& state) {
  const int topics = static_cast<int>(state.range(0));
  const dmr::Corpus corpus = bench_corpus(topics);
  dmr::LambdaMatrix lambda(topics, corpus.features.size());
  std::vector<dmr::DirichletPrior> priors;
  for (const dmr::Document& doc : corpus.documents) {
    priors.push_back(dmr::compute_alpha(doc.features, lambda, doc.id));
  }
  dmr::TopicState topic_state = dmr::init_assignments(corpus, topics, 11);
  for (auto _ : state) {
    dmr::gibbs_sweep(topic_state, priors, 0.01);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(topic_state.total_tokens()));
}
BENCHMARK(BM_GibbsSweep)->Arg(5)->Arg(20);

void BM_ObjectiveAndGradient(benchmark::State& state) {
  const int topics = static_cast<int>(state.range(0));
  const dmr::Corpus corpus = bench_corpus(topics);
  const dmr::TopicState topic_state = dmr::init_assignments(corpus, topics, 11);
  dmr::LambdaMatrix lambda(topics, corpus.features.size());
  for (double& v : lambda.data()) v = 0.01;
  const std::vector<double>& variances = corpus.features.variances();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmr::dmr_log_likelihood(topic_state, lambda, corpus, variances));
    benchmark::DoNotOptimize(dmr::dmr_gradient(topic_state, lambda, corpus, variances));
  }
}
BENCHMARK(BM_ObjectiveAndGradient)->Arg(5)->Arg(20);

void BM_EmpiricalLikelihood(benchmark::State& state) {
  dmr::SynthConfig config;
  config.docs = 40;
  config.topics = 10;
  config.vocab = 500;
  config.authors = 4;
  config.doc_len = 100;
  config.seed = 97;
  dmr::EncoderOptions encoder;
  encoder.features = {"authors"};
  encoder.min_papers = 2;
  dmr::TrainConfig train;
  train.topics = 10;
  train.iterations = 20;
  train.burn_in = 5;
  train.optimize_interval = 5;
  const dmr::SynthOutput output = dmr::generate_synthetic(config);
  const dmr::ModelSnapshot snapshot =
      dmr::train_dmr(dmr::encode_corpus(output.records, encoder), train);
  const dmr::Document doc =
      dmr::encode_held_out(output.records.front(), snapshot.vocabulary, snapshot.features, {});
  dmr::EvalConfig eval;
  eval.el_samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dmr::empirical_likelihood(snapshot, doc, eval));
  }
}
BENCHMARK(BM_EmpiricalLikelihood)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
