import argparse
import getpass
import os
import subprocess
import time
from pathlib import Path
from typing import List
from warnings import warn

TIME = '24:00:00'
MEM = '16G'
CPUS = 4


def get_args(argv: List[str] = None):
    parser = argparse.ArgumentParser(description='Submit monochrome run scripts to SLURM.')
    parser.add_argument('experiments', nargs='+',
                        help='Path to one or more experiment.py files, or directories under runs/ '
                             'containing them')
    parser.add_argument('--time', default=TIME,
                        help='Wall-time for each SLURM job. Defaults to {}'.format(TIME))
    parser.add_argument('--mem', default=MEM,
                        help='Memory for each SLURM job. Defaults to {}'.format(MEM))
    parser.add_argument('--cpus', default=CPUS, type=int,
                        help='CPUs per job; should match run_config["jobs"]. '
                             'Defaults to {}'.format(CPUS))
    parser.add_argument('--env', default=None,
                        help='Virtualenv to activate before running')
    parser.add_argument('--dry-run', default=False, action='store_true',
                        help='Write the .sh files next to each script without calling sbatch')
    return parser.parse_args(argv)


def main(experiments: List[Path], dry_run: bool = False, **kwargs) -> List[Path]:
    paths = sanitize_paths([e.resolve() for e in experiments])
    scripts = write_submission_scripts(paths, **kwargs)
    if not dry_run:
        run_slurm_job(scripts, **kwargs)
    return scripts


def sanitize_paths(experiments: List[Path]) -> List[Path]:
    paths = []
    for exp in experiments:
        if exp.is_dir():
            paths.extend(
                Path(root) / file for root, _, files in os.walk(exp)
                for file in files if file == 'experiment.py'
            )
        elif exp.name == 'experiment.py':
            paths.append(exp)
        else:
            warn('not a run script: `{}` skipping...'.format(exp))
    if not paths:
        raise ValueError('arg `experiments` had no experiment.py under: {}'.format(
            [str(e) for e in experiments]))
    return sorted(paths)


def submission_script(path: Path, **kwargs) -> str:
    lines = [
        '#!/bin/bash',
        '#SBATCH --export=ALL',
        '#SBATCH --job-name=monochrome-{}'.format(path.parent.name),
        '#SBATCH --time={}'.format(kwargs.get('time', TIME)),
        '#SBATCH --mem={}'.format(kwargs.get('mem', MEM)),
        '#SBATCH --cpus-per-task={}'.format(kwargs.get('cpus', CPUS)),
        '#SBATCH --chdir={}'.format(path.parent),
        '#SBATCH --output=slurm-%j.out',
        '',
    ]
    if kwargs.get('env'):
        lines.append('. {}/bin/activate'.format(kwargs['env']))
    lines.append('python {}'.format(path))
    return '\n'.join(lines) + '\n'


def write_submission_scripts(paths: List[Path], **kwargs) -> List[Path]:
    scripts = []
    for path in paths:
        script = path.with_suffix('.sh')
        script.write_text(submission_script(path, **kwargs))
        scripts.append(script)
    return scripts


def run_slurm_job(scripts: List[Path], sleep_time: float = 3, **kwargs):
    for script in scripts:
        subprocess.run(['sbatch', str(script)], check=True)
        time.sleep(sleep_time)
    subprocess.run(['squeue', '-u', getpass.getuser()])


if __name__ == '__main__':
    args = get_args()
    main(
        [Path(p) for p in args.experiments],
        dry_run=args.dry_run,
        time=args.time,
        mem=args.mem,
        cpus=args.cpus,
        env=args.env,
    )
