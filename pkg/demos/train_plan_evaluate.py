"""Train a small world model offline, then act with MPPI planning.

Collects uniform-random episodes on the five built-in tasks, fits a
model for a few hundred steps and compares the planner against the bare
policy prior.  Scores are on the 0-100 normalized scale; with this little
data and training they stay low, the point is the plumbing.

    python demos/train_plan_evaluate.py
"""
import numpy as np

from tdopt import envs
from tdopt.data import generate_dataset
from tdopt.evaluation import evaluate
from tdopt.planner import PlanConfig, plan
from tdopt.trainer import TrainConfig, Trainer
from tdopt.world_model import ModelConfig, WorldModel

tasks = envs.mt5_mini()
for t in tasks:
    print(f"{t.name:20s} obs {t.obs_dim} act {t.action_dim} horizon {t.episode_length}")

ds = generate_dataset(tasks, "random", 20, seed=0)
model = WorldModel.init(ModelConfig(latent_dim=16, hidden_dim=32, n_hidden=1, simnorm_group=4, task_dim=4), tasks, 0)
print(f"\n{len(ds.episodes)} episodes, model with {model.parameter_count()} parameters")

trainer = Trainer(model, TrainConfig(batch_size=64, horizon=3, lr=1e-3), ds)
hist = trainer.run(300)
for i in (0, 99, 199, 299):
    h = hist[i]
    print(f"step {i + 1:3d}  consistency {h.consistency:.4f}  reward {h.reward:.3f}  value {h.value:.3f}")

# one planning call, looking at the refinement of the best elite score
cfg = PlanConfig(horizon=3, n_samples=64, n_policy_samples=8, n_elites=8, n_iterations=4)
task = tasks[1]
obs = envs.observe(task, envs.reset(task, np.random.default_rng(1)))
padded = np.zeros((1, model.max_obs), np.float32)
padded[:, :task.obs_dim] = obs
res = plan(model, model.encode(padded, [task.task_id]), [task.task_id], cfg, np.random.default_rng(2))
print(f"\n{task.name}: action {res.action[0].round(3)}  best score per iteration {res.best_scores[:, 0].round(3)}")

for use_planner in (False, True):
    rep = evaluate(model, tasks, n_episodes=2, seeds=[0], plan_cfg=cfg, use_planner=use_planner)
    label = "planner" if use_planner else "policy prior"
    print(f"{label:13s} normalized {rep.normalized:6.2f}  " +
          " ".join(f"{k}={v:.0f}" for k, v in rep.task_scores.items()))
